"""Exception hierarchy for reduction_lab."""


class ReductionLabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ReductionLabError):
    """An input violates a mathematical precondition (shape, symmetry, sign)."""


class RegularityError(ReductionLabError):
    """A configuration touches a chamber wall within the working margin.

    Attributes
    ----------
    root : str or None
        Label of the offending restricted root, when known.
    margin : float or None
        The violating value of ``|alpha(q)|``.
    time : float or None
        Flow time of the breach, for trajectory-level failures.
    """

    def __init__(self, message, root=None, margin=None, time=None):
        super().__init__(message)
        self.root = root
        self.margin = margin
        self.time = time


class ConstraintViolation(ReductionLabError):
    """The momentum-map constraint on the spin pair is not satisfied."""


class ConsistencyError(ReductionLabError):
    """Orbit parameters violate a consistency inequality of the setup."""


class FactorizationError(ReductionLabError):
    """A matrix factorization failed or its input is structurally invalid."""


class FitConditioningError(ReductionLabError):
    """A least-squares fit is too ill-conditioned to be trusted."""


class GridMismatchError(ReductionLabError):
    """Two trajectories do not share a common time grid."""


class ConfigError(ReductionLabError):
    """A run configuration is malformed or violates a case precondition."""
