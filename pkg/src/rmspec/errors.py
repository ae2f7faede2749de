"""Exception types raised by rmspec."""


class RmspecError(Exception):
    """Base class for all rmspec errors."""


class DomainError(RmspecError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Gamma evaluated at (or within tolerance of) a non-positive integer."""


class DegenerateGammaError(DomainError):
    """2F1 third parameter is (within tolerance of) a non-positive integer."""


class NoConvergenceError(RmspecError):
    """An iterative scheme failed to reach tolerance within its budget."""


class SecondSolutionUndefinedError(DomainError):
    """The second hypergeometric solution does not exist (2-gamma is a
    non-positive integer)."""


class TransitionPointError(DomainError):
    """Momentum too close to the multiplicity transition sqrt(v_plus - v_minus)."""


class GridError(DomainError):
    """A supplied grid is malformed for the requested operation."""
