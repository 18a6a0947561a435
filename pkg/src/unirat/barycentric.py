"""Barycentric rational approximants of exp(ix) and their evaluation.

Three forms are provided:

* ``BarycentricInterpolant`` -- r(x) = sum f_j w_j/(x-y_j) / sum w_j/(x-y_j)
  with f_j = exp(i y_j); interpolates exp(ix) at the support nodes.
* ``CayleyApproximant`` -- r(x) = conj(xi(x))/xi(x) with
  xi(x) = sum w_j/(x-y_j); unit modulus on the real axis by construction.
* ``NonInterpolatoryApproximant`` -- quotient of two independent partial
  fractions with coefficients alpha and beta.

Support-node hits are detected by exact float equality and replaced by the
appropriate limit value.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AmbiguousEvaluationError,
    InvalidInputError,
    NotCayleyRepresentableError,
    PoleEvaluationError,
)
from .linalg import EPS


def _check_support(y):
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if y.size < 1 or not np.all(np.isfinite(y)):
        raise InvalidInputError("support nodes must be nonempty and finite")
    if len(set(y.tolist())) != y.size:
        raise InvalidInputError("support nodes must be pairwise distinct")
    return y


def _as_coeff(w, m, name="coefficients"):
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    if w.shape != (m,):
        raise InvalidInputError(f"{name} must have one entry per support node")
    if not np.all(np.isfinite(w)):
        raise InvalidInputError(f"{name} must be finite")
    return w


def _partial_fraction(coeff, support, xv):
    """Row sums of coeff_j / (x - y_j), with support hits masked out."""
    D = xv[:, None] - support[None, :]
    hit = D == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        T = coeff[None, :] / D
    T[hit] = 0.0
    return T.sum(axis=1), hit


def _prepare(x):
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(xv)):
        raise InvalidInputError("evaluation points must be finite")
    return xv, np.isscalar(x) or np.ndim(x) == 0


def _finish(out, scalar):
    return complex(out[0]) if scalar else out


def cayley_phase_residual(w, support):
    """max_j |e^{i y_j} w_j - conj(w_j)|."""
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    support = np.atleast_1d(np.asarray(support, dtype=float))
    if w.shape != support.shape:
        raise InvalidInputError("coefficients and support nodes must match in length")
    return float(np.max(np.abs(np.exp(1j * support) * w - np.conj(w))))


@dataclass(frozen=True)
class BarycentricInterpolant:
    """Interpolatory form r = n/d; coefficients are normalized to unit norm."""

    support: np.ndarray
    coefficients: np.ndarray
    values: np.ndarray = field(init=False)

    def __post_init__(self):
        y = _check_support(self.support)
        w = _as_coeff(self.coefficients, y.size)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise InvalidInputError("coefficient vector must not be identically zero")
        if abs(norm - 1.0) > 32 * EPS:  # keep already-normalized vectors bit-stable
            w = w / norm
        object.__setattr__(self, "support", y)
        object.__setattr__(self, "coefficients", w)
        object.__setattr__(self, "values", np.exp(1j * y))

    def eval(self, x):
        return eval_interpolant(self, x)

    def denominator(self, x):
        xv, scalar = _prepare(x)
        d, _ = _partial_fraction(self.coefficients, self.support, xv)
        return _finish(d, scalar)


def eval_interpolant(r, x):
    """Evaluate r = n/d; at a support node y_j returns f_j = exp(i y_j)."""
    xv, scalar = _prepare(x)
    d, hit = _partial_fraction(r.coefficients, r.support, xv)
    n, _ = _partial_fraction(r.values * r.coefficients, r.support, xv)
    out = np.empty(xv.size, dtype=complex)
    hit_rows = np.any(hit, axis=1)
    plain = ~hit_rows
    bad = plain & (d == 0.0)
    if np.any(bad):
        raise PoleEvaluationError(float(xv[np.argmax(bad)]))
    with np.errstate(invalid="ignore"):
        out[plain] = n[plain] / d[plain]
    for i in np.nonzero(hit_rows)[0]:
        j = int(np.argmax(hit[i]))
        if r.coefficients[j] == 0.0:
            raise AmbiguousEvaluationError(float(xv[i]))
        out[i] = r.values[j]
    return _finish(out, scalar)


@dataclass(frozen=True)
class CayleyApproximant:
    """Unitary form r = conj(xi)/xi.

    ``phase_residual`` records max |f_j w_j - conj(w_j)|; it is at machine
    precision for coefficients built as i K (real vector), in which case the
    approximant also interpolates exp(ix) at the support nodes.
    """

    support: np.ndarray
    coefficients: np.ndarray
    phase_residual: float = field(init=False)

    def __post_init__(self):
        y = _check_support(self.support)
        w = _as_coeff(self.coefficients, y.size)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            raise InvalidInputError("coefficient vector must not be identically zero")
        if abs(norm - 1.0) > 32 * EPS:
            w = w / norm
        object.__setattr__(self, "support", y)
        object.__setattr__(self, "coefficients", w)
        object.__setattr__(self, "phase_residual", cayley_phase_residual(w, y))

    def eval(self, x):
        return eval_cayley(self, x)

    def denominator(self, x):
        xv, scalar = _prepare(x)
        return _finish(_xi(self, xv), scalar)


def to_cayley(w, support, tol=1e-12):
    """Certified construction: rejects coefficients whose conjugate-phase
    residual exceeds ``tol``."""
    r = CayleyApproximant(support=support, coefficients=w)
    if r.phase_residual > tol:
        raise NotCayleyRepresentableError(r.phase_residual, tol)
    return r


def _xi(r, xv):
    xi, hit = _partial_fraction(r.coefficients, r.support, xv)
    hit_rows = np.any(hit, axis=1)
    for i in np.nonzero(hit_rows)[0]:
        j = int(np.argmax(hit[i]))
        xi[i] = r.coefficients[j]
    return xi


def eval_cayley(r, x):
    """conj(xi)/xi with xi = sum w_j/(x-y_j); at a support hit xi = w_j."""
    xv, scalar = _prepare(x)
    xi = _xi(r, xv)
    if np.any(xi == 0.0):
        raise PoleEvaluationError(float(xv[np.argmax(xi == 0.0)]))
    return _finish(np.conj(xi) / xi, scalar)


@dataclass(frozen=True)
class NonInterpolatoryApproximant:
    """r_b = n_b/d_b with independent numerator and denominator coefficients;
    normalized so ||alpha||^2 + ||beta||^2 = 1."""

    support: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        y = _check_support(self.support)
        a = _as_coeff(self.alpha, y.size, "alpha")
        b = _as_coeff(self.beta, y.size, "beta")
        norm = np.sqrt(np.linalg.norm(a) ** 2 + np.linalg.norm(b) ** 2)
        if norm == 0.0:
            raise InvalidInputError("coefficients must not be identically zero")
        if abs(norm - 1.0) > 32 * EPS:
            a = a / norm
            b = b / norm
        object.__setattr__(self, "support", y)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def eval(self, x):
        return eval_noninterpolatory(self, x)

    def denominator(self, x):
        xv, scalar = _prepare(x)
        d, hit = _partial_fraction(self.beta, self.support, xv)
        hit_rows = np.any(hit, axis=1)
        for i in np.nonzero(hit_rows)[0]:
            j = int(np.argmax(hit[i]))
            d[i] = self.beta[j]
        return _finish(d, scalar)


def eval_noninterpolatory(r, x):
    """n_b/d_b off support; the limit alpha_j/beta_j at a support hit."""
    xv, scalar = _prepare(x)
    d, hit = _partial_fraction(r.beta, r.support, xv)
    n, _ = _partial_fraction(r.alpha, r.support, xv)
    out = np.empty(xv.size, dtype=complex)
    hit_rows = np.any(hit, axis=1)
    plain = ~hit_rows
    bad = plain & (d == 0.0)
    if np.any(bad):
        raise PoleEvaluationError(float(xv[np.argmax(bad)]))
    with np.errstate(invalid="ignore"):
        out[plain] = n[plain] / d[plain]
    for i in np.nonzero(hit_rows)[0]:
        j = int(np.argmax(hit[i]))
        if r.beta[j] == 0.0:
            raise PoleEvaluationError(float(xv[i]))
        out[i] = r.alpha[j] / r.beta[j]
    return _finish(out, scalar)
