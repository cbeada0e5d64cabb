"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class HyperdetError(Exception):
    """Base class for all library errors."""


class DimensionError(HyperdetError):
    """Shapes do not fit together (non-square, wrong length, bad axis or index)."""


class FormatError(HyperdetError):
    """The tensor format (or binary form) is not one the operation handles."""


class DomainError(HyperdetError):
    """Argument outside the mathematical domain, e.g. a zero tensor or zero vector."""


class StructureError(HyperdetError):
    """Matrix lacks the required structure (skew-symmetric, even order)."""


class SeriesError(HyperdetError):
    """Power series inversion with a nonzero constant term."""


class UndefinedResultantError(HyperdetError):
    """Resultant of two constants."""


class PreconditionError(HyperdetError):
    """Pencil is not regular."""


class PivotError(HyperdetError):
    """A0 is singular; the message carries a remedy hint."""

    def __init__(self, message: str, hint: str = ""):
        super().__init__(message)
        self.hint = hint

    def __str__(self) -> str:
        base = super().__str__()
        return f"{base} (hint: {self.hint})" if self.hint else base


class SizeError(HyperdetError):
    """Requested ∂_A exceeds the configured size cap."""


class DocumentError(HyperdetError):
    """A tensor or point-tuple document could not be read."""


class InconsistencyError(HyperdetError, RuntimeError):
    """Two routes that must agree did not, or a post-check identity failed."""
