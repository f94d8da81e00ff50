"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI: InputError -> 2,
HypothesisViolation -> 3, DegenerateConfiguration -> 4.
"""


class FourLinesError(Exception):
    """Base class for all library errors."""


class InputError(FourLinesError):
    """Malformed or out-of-domain input."""


class DimensionError(InputError):
    """Matrix or index-set dimensions do not match the operation."""


class DomainError(InputError):
    """A scalar argument violates a domain constraint (e.g. non-positive parameter)."""


class RadicandMismatch(InputError):
    """Arithmetic attempted between quadratic numbers of different field contexts."""


class SingularMatrixError(FourLinesError):
    """Inversion of a matrix whose determinant vanishes."""

    def __init__(self, message="matrix is singular: determinant = 0"):
        super().__init__(message)


class DegenerateConfiguration(FourLinesError):
    """The input configuration is too special for the requested construction."""


class DegenerateLine(DegenerateConfiguration):
    """A claimed line has rank < 2."""


class DegeneratePencil(DegenerateConfiguration):
    """The two incidence equations are proportional; elimination is impossible."""


class NonGenericConfiguration(DegenerateConfiguration):
    """A genericity assumption of the solving chart fails (e.g. both denominators vanish)."""


class HypothesisViolation(FourLinesError):
    """Total-positivity (or convexity) hypothesis fails; carries a witness when known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotTotallyPositive(HypothesisViolation):
    """A matrix expected to be totally positive is not."""


class NoRealSolution(HypothesisViolation):
    """Negative discriminant: no real transversal in the chart."""


class NotConvex(HypothesisViolation):
    """A curve fails a necessary convexity condition."""


class SearchFailure(FourLinesError):
    """An iterative deterministic search exceeded its cap."""
