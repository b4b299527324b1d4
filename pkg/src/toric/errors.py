"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(ToricError, ValueError):
    """Operands have incompatible or invalid dimensions."""


class StructureError(ToricError, ValueError):
    """An object violates a structural precondition (non-pointed cone,
    rank-deficient generators, lower-dimensional input, ...)."""


class InputError(ToricError, ValueError):
    """A user-supplied document is malformed or fails validation."""
