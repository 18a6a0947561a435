"""Lawson re-weighted minimax phase on fixed support nodes.

The support nodes are appended to the test set so accuracy can be enforced
there too.  Each step minimizes a weighted linearized error via the smallest
right singular vector: the MODIFIED variant uses the real matrix Bhat and
reconstructs beta_j = (g_j - i g_{j+m})/sqrt(2), the ORIGINAL variant uses a
complex SVD of [M | -S_F M].  Weights are multiplied by the current absolute
errors and renormalized to max 1 after every step.
"""

from dataclasses import dataclass, field

import numpy as np

from .barycentric import CayleyApproximant, NonInterpolatoryApproximant
from .errors import InvalidInputError
from .linalg import svd_complex, svd_real

SQRT2 = np.sqrt(2.0)

VARIANTS = ("original", "modified")


@dataclass(frozen=True)
class LawsonConfig:
    n_lawson: int
    variant: str = "modified"

    def __post_init__(self):
        if self.n_lawson < 1:
            raise InvalidInputError("n_lawson must be at least 1")
        if self.variant not in VARIANTS:
            raise InvalidInputError(f"variant must be one of {VARIANTS}")


@dataclass
class LawsonStep:
    step: int
    max_error: float
    worst_node: float
    sigma_min: float


@dataclass
class LawsonTrace:
    steps: list = field(default_factory=list)
    exact_fit: bool = False


def lawson_weight_update(weights, errors):
    """mu_k <- mu_k |eps_k|, then divide by the max entry.

    Returns None when every product is zero (exact fit; the caller stops).
    """
    weights = np.atleast_1d(np.asarray(weights, dtype=float))
    errors = np.atleast_1d(np.asarray(errors))
    if weights.shape != errors.shape:
        raise InvalidInputError("weights and errors must have equal length")
    mu = weights * np.abs(errors)
    top = mu.max()
    if top == 0.0:
        return None
    return mu / top


def lawson_fit(test_nodes, support_nodes, config):
    """Run ``config.n_lawson`` re-weighted least-squares steps.

    Returns ``(approximant, trace)``: a ``CayleyApproximant`` built from the
    beta coefficients for the modified variant, or a
    ``NonInterpolatoryApproximant`` carrying both alpha and beta for the
    original variant.
    """
    x = np.atleast_1d(np.asarray(test_nodes, dtype=float))
    y = np.atleast_1d(np.asarray(support_nodes, dtype=float))
    if len(set(x.tolist())) != x.size:
        raise InvalidInputError("test nodes must be pairwise distinct")
    if len(set(y.tolist())) != y.size:
        raise InvalidInputError("support nodes must be pairwise distinct")
    if set(x.tolist()) & set(y.tolist()):
        raise InvalidInputError("support nodes are appended internally; "
                                "pass disjoint test nodes")

    m = y.size
    xa = np.concatenate([x, y])
    F = np.exp(1j * xa)
    S_F = F
    mu = np.ones(xa.size)

    # modified Cauchy: plain rows for the original test nodes, unit rows for
    # the appended support nodes
    Cp = np.zeros((xa.size, m))
    Cp[: x.size] = 1.0 / (x[:, None] - y[None, :])
    Cp[x.size :] = np.eye(m)

    from .loewner import phase_entries

    R = phase_entries(xa)
    A = np.hstack([R.real[:, None] * Cp, -R.imag[:, None] * Cp])

    trace = LawsonTrace()
    alpha = beta = None
    for step in range(1, config.n_lawson + 1):
        smu = np.sqrt(mu)[:, None]
        if config.variant == "modified":
            res = svd_real(smu * A)
            g = res.right_vectors[:, -1]
            beta = (g[:m] - 1j * g[m:]) / SQRT2
            alpha = np.conj(beta)
            xi = Cp @ beta
            with np.errstate(divide="ignore", invalid="ignore"):
                r = np.conj(xi) / xi
            r[xi == 0.0] = np.inf
        else:
            M = smu * Cp
            res = svd_complex(np.hstack([M, -S_F[:, None] * M]))
            g = res.right_vectors[:, -1]
            alpha, beta = g[:m], g[m:]
            num = Cp @ alpha
            den = Cp @ beta
            with np.errstate(divide="ignore", invalid="ignore"):
                r = num / den
            r[den == 0.0] = np.inf

        eps = F - r
        worst = int(np.argmax(np.abs(eps)))
        trace.steps.append(
            LawsonStep(step=step, max_error=float(np.abs(eps[worst])),
                       worst_node=float(xa[worst]),
                       sigma_min=float(res.singular_values[-1]))
        )
        mu_next = lawson_weight_update(mu, eps)
        if mu_next is None:
            trace.exact_fit = True
            break
        mu = mu_next

    if config.variant == "modified":
        return CayleyApproximant(support=y, coefficients=beta), trace
    return NonInterpolatoryApproximant(support=y, alpha=alpha, beta=beta), trace
