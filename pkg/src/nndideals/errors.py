"""Exception hierarchy shared by every module of the package."""


class NewtonError(Exception):
    """Base class for all errors raised by :mod:`nndideals`."""


class DomainError(NewtonError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class EmptyGenerator(NewtonError, ValueError):
    """A hull or ideal was requested from no (nonzero) generators."""


class DimensionError(NewtonError, ValueError):
    """Objects of different ambient dimension were combined."""


class UnsupportedDimension(NewtonError):
    """The operation is only implemented for small ambient dimensions."""


class NotCoFinite(DomainError):
    """The complement of a staircase polyhedron in the orthant is unbounded."""


class NotPrimaryOrBudget(NewtonError):
    """Colength did not stabilize: the ideal is not m-primary or the budget ran out."""


class NotPrimary(NotPrimaryOrBudget, DomainError):
    """The ideal is provably not m-primary."""


class BudgetExceeded(NewtonError):
    """An iterative computation exhausted its configured budget."""


class StabilizationBudgetExceeded(NotPrimaryOrBudget, BudgetExceeded):
    """Truncated colengths kept growing up to the truncation budget."""


class FaceKindError(NewtonError, ValueError):
    """A face of the wrong kind (e.g. a vertex instead of an edge) was supplied."""


class GradednessViolation(DomainError):
    """A family prefix fails a necessary condition for I_p I_q being inside I_{p+q}."""


class ParseError(NewtonError, ValueError):
    """An input document could not be parsed."""
