"""Exception types shared across the package."""


class QSplineError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QSplineError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(QSplineError, RuntimeError):
    """An iterative computation failed to reach the requested tolerance."""


class InvalidDataError(QSplineError, ValueError):
    """Input data violates a structural requirement (ordering, shape, finiteness)."""


class OutOfDomainError(QSplineError, ValueError):
    """Evaluation point lies outside the knot range and extrapolation is disabled."""


class SingularSystemError(QSplineError, RuntimeError):
    """A linear system is numerically singular (pivot breakdown in both solvers).

    Carries the deformation parameter ``q`` and the offending row index when
    they are known, for diagnostics.
    """

    def __init__(self, message, q=None, row=None):
        super().__init__(message)
        self.q = q
        self.row = row
