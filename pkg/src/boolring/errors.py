"""Exception hierarchy shared across the package.

Two branches matter for callers: ``InputError`` covers malformed input
(bad grammar, unknown names, out-of-range sizes) and maps to exit code 2
in the CLI; ``ModelAssumptionError`` and ``NumericsError`` cover runs
where the data violates a method assumption (complex second eigenvalue,
degenerate clustering, solver failure) and map to exit code 3.
"""


class BoolringError(Exception):
    """Base class for all package errors."""


class InputError(BoolringError, ValueError):
    """Invalid user input: grammar, names, file formats, size limits."""


class ExpressionSyntaxError(InputError):
    """Expression text violates the grammar; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(InputError):
    """An identifier does not name a generator of the ring."""


class UnboundVariableError(InputError):
    """A variable has no binding and no generator of the same name."""


class ContextMismatchError(InputError):
    """Operands belong to different ring contexts."""


class EnumerationLimitError(InputError):
    """The requested enumeration is too large to materialize."""


class UnlearnedColumnError(InputError):
    """A prediction uses a characteristic that was never observed in training."""


class ModelAssumptionError(BoolringError, RuntimeError):
    """The data violates an assumption of the requested analysis."""


class ComplexPairError(ModelAssumptionError):
    """The second-sorted eigenvalue is part of a complex conjugate pair."""


class EigenvalueTieError(ModelAssumptionError):
    """Second and third eigenvalues are equidistant from the leading one."""


class DegenerateClusterError(ModelAssumptionError):
    """The fuzzy 2-cluster membership matrix is numerically degenerate."""


class NumericsError(BoolringError, RuntimeError):
    """A numeric kernel could not meet its accuracy contract."""


class IterationLimitError(NumericsError):
    """An iterative solver hit its iteration cap before converging."""
