"""Exception types shared across the package."""


class SteklovError(Exception):
    """Base class for errors raised by this package."""


class GraphFormatError(SteklovError):
    """A graph JSON document is malformed or breaks the format rules."""


class NotSPDError(SteklovError):
    """A matrix required to be symmetric positive definite is not."""


class EigenConvergenceError(SteklovError):
    """The Jacobi eigensolver exceeded its sweep cap without converging."""


class NumericalError(SteklovError):
    """A numeric contract (residual or tolerance bound) could not be met."""
