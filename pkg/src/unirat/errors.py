"""Exception types shared across the package."""


class UniratError(Exception):
    """Base class for all package errors."""


class InvalidInputError(UniratError, ValueError):
    """Rejected input: non-finite entries, bad shapes, bad parameters."""


class NodeCollisionError(InvalidInputError):
    """A test node coincides with a support node where that is not allowed."""

    def __init__(self, test_node, support_node):
        self.test_node = test_node
        self.support_node = support_node
        super().__init__(
            f"test node {test_node!r} collides with support node {support_node!r}"
        )


class NumericalFailureError(UniratError, RuntimeError):
    """An iterative kernel failed to converge; carries the final residual."""

    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")


class PoleEvaluationError(UniratError, ArithmeticError):
    """The denominator of a rational approximant vanished at an evaluation point."""

    def __init__(self, location):
        self.location = location
        super().__init__(f"denominator vanishes at x = {location!r}")


class AmbiguousEvaluationError(UniratError, ArithmeticError):
    """Evaluation at a support node whose coefficient is zero (removable ambiguity)."""

    def __init__(self, location):
        self.location = location
        super().__init__(f"zero coefficient at support node x = {location!r}")


class NotCayleyRepresentableError(InvalidInputError):
    """Coefficients violate the conjugate-phase identity required for ξ*/ξ interpolation."""

    def __init__(self, residual, tol):
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"max |f_j w_j - conj(w_j)| = {residual:.3e} exceeds tolerance {tol:.3e}"
        )
