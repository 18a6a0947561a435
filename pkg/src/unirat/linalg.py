"""Dense singular value decomposition kernel.

Real matrices are factored with a one-sided Jacobi iteration, which keeps
good relative accuracy for the small singular values that carry the
approximant coefficients.  Complex matrices are reduced to a real SVD of the
2-fold embedding [[Re A, -Im A], [Im A, Re A]]; the duplicated spectrum is
collapsed back to complex singular vectors by a projection pass.
"""

import os
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, NumericalFailureError

EPS = float(np.finfo(float).eps)

#: Default cap on Jacobi sweeps; override with the UNIRAT_SWEEP_CAP env var.
DEFAULT_SWEEP_CAP = 60


def sweep_cap():
    return int(os.environ.get("UNIRAT_SWEEP_CAP", DEFAULT_SWEEP_CAP))


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD ``A V = U diag(s)``.

    ``singular_values`` has one entry per column of A, in descending order
    (for a matrix with fewer rows than columns the trailing values are the
    numerically zero ones).  ``right_vectors`` is the square cols x cols
    basis; ``left_vectors`` holds min(rows, cols) orthonormal columns.
    """

    singular_values: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray


def _validate(A, dtype):
    A = np.asarray(A, dtype=dtype)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise InvalidInputError(f"expected a nonempty 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidInputError("matrix contains non-finite entries")
    return A


def _jacobi_orthogonalize(M, V):
    """One-sided Jacobi sweeps on the columns of M, accumulating V."""
    m = M.shape[1]
    cap = sweep_cap()
    for _ in range(cap):
        rotated = False
        for p in range(m - 1):
            for q in range(p + 1, m):
                cp = M[:, p]
                cq = M[:, q]
                app = cp @ cp
                aqq = cq @ cq
                apq = cp @ cq
                if abs(apq) <= EPS * np.sqrt(app * aqq) or apq == 0.0:
                    continue
                with np.errstate(over="ignore"):
                    zeta = (aqq - app) / (2.0 * apq)
                if not np.isfinite(zeta):
                    continue  # rotation angle below representable resolution
                rotated = True
                if zeta == 0.0:
                    t = 1.0
                elif abs(zeta) > 1e150:
                    t = 0.5 / zeta
                else:
                    t = np.sign(zeta) / (abs(zeta) + np.hypot(1.0, zeta))
                cs = 1.0 / np.hypot(1.0, t)
                sn = cs * t
                M[:, p], M[:, q] = cs * cp - sn * cq, sn * cp + cs * cq
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = cs * vp - sn * vq
                V[:, q] = sn * vp + cs * vq
        if not rotated:
            return
    # the cap was reached; accept the result if the last sweep actually
    # drove the off-diagonal Gram entries to roundoff level
    norms = np.linalg.norm(M, axis=0)
    G = M.T @ M
    scale = np.outer(norms, norms)
    off = np.abs(G - np.diag(np.diag(G)))
    with np.errstate(invalid="ignore", divide="ignore"):
        rel = np.where(scale > 0, off / scale, 0.0)
    residual = float(np.max(rel))
    if residual > 8.0 * EPS:
        raise NumericalFailureError(
            f"Jacobi SVD did not converge within {cap} sweeps", residual
        )


def _complete_basis(U, start, n):
    """Fill U[:, start:] with orthonormal columns via Gram-Schmidt from e_i."""
    col = start
    cand = 0
    while col < U.shape[1]:
        if cand >= n:
            raise NumericalFailureError("failed to complete orthonormal basis", 0.0)
        v = np.zeros(n, dtype=U.dtype)
        v[cand] = 1.0
        cand += 1
        for _ in range(2):  # twice is enough
            v = v - U[:, :col] @ (U[:, :col].conj().T @ v)
        nv = np.linalg.norm(v)
        if nv < 0.5:
            continue
        U[:, col] = v / nv
        col += 1


def _apply_sign_convention(sigma, V, U):
    """Make the largest-magnitude entry of each right singular vector
    real-nonnegative, adjusting U consistently."""
    k = U.shape[1]
    for j in range(V.shape[1]):
        i = int(np.argmax(np.abs(V[:, j])))
        entry = V[i, j]
        if entry == 0:
            continue
        if np.iscomplexobj(V):
            phase = np.conj(entry) / abs(entry)
            if phase != 1.0:
                V[:, j] *= phase
                if j < k:
                    U[:, j] *= phase
        elif entry < 0:
            V[:, j] = -V[:, j]
            if j < k:
                U[:, j] = -U[:, j]


def svd_real(A):
    """Thin SVD of a real matrix via one-sided Jacobi."""
    A = _validate(A, float)
    n, m = A.shape
    M = A.copy()
    V = np.eye(m)
    _jacobi_orthogonalize(M, V)

    # re-evaluate A V from the original matrix so the reported singular
    # values are exactly the norms achieved by the returned right vectors
    M = A @ V
    norms = np.linalg.norm(M, axis=0)
    order = np.argsort(-norms, kind="stable")
    sigma = norms[order]
    V = V[:, order]
    M = M[:, order]

    k = min(n, m)
    U = np.zeros((n, k))
    smax = sigma[0]
    filled = 0
    for j in range(k):
        if sigma[j] > n * EPS * smax and sigma[j] > 0.0:
            U[:, j] = M[:, j] / sigma[j]
            filled = j + 1
        else:
            break
    if filled < k:
        _complete_basis(U, filled, n)

    _apply_sign_convention(sigma, V, U)
    return SvdResult(singular_values=sigma, right_vectors=V, left_vectors=U)


def svd_complex(A):
    """Thin SVD of a complex matrix via the real 2-fold embedding."""
    A = np.asarray(A, dtype=complex)
    A = _validate(A, complex)
    n, m = A.shape
    E = np.block([[A.real, -A.imag], [A.imag, A.real]])
    res = svd_real(E)

    # Every singular value of A shows up twice in E.  Map the real right
    # vectors [a; b] -> a + i b and keep one representative per duplicate by
    # projecting out the complex span collected so far.
    sig_all = res.singular_values
    Z = res.right_vectors
    V = np.zeros((m, m), dtype=complex)
    sigma = np.zeros(m)
    got = 0
    for col in range(2 * m):
        v = Z[:m, col] + 1j * Z[m:, col]
        if got:
            v = v - V[:, :got] @ (V[:, :got].conj().T @ v)
        nv = np.linalg.norm(v)
        if nv < 0.1:
            continue
        v = v / nv
        V[:, got] = v
        # rate the paired vector against the complex matrix itself rather
        # than trusting the embedding value through the projection step
        sigma[got] = np.linalg.norm(A @ v)
        got += 1
        if got == m:
            break
    if got < m:
        raise NumericalFailureError(
            "complex SVD pairing could not extract a full right basis", float(m - got)
        )
    order = np.argsort(-sigma, kind="stable")  # re-rating can swap near-ties
    sigma = sigma[order]
    V = V[:, order]

    k = min(n, m)
    U = np.zeros((n, k), dtype=complex)
    smax = sigma[0]
    filled = 0
    for j in range(k):
        if sigma[j] > n * EPS * smax and sigma[j] > 0.0:
            u = A @ V[:, j]
            if j:
                u = u - U[:, :j] @ (U[:, :j].conj().T @ u)
            U[:, j] = u / np.linalg.norm(u)
            filled = j + 1
        else:
            break
    if filled < k:
        _complete_basis(U, filled, n)

    _apply_sign_convention(sigma, V, U)
    return SvdResult(singular_values=sigma, right_vectors=V, left_vectors=U)
