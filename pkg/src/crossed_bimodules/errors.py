"""Exception hierarchy shared by the library and the command line."""

from typing import Optional


class CrossedBimoduleError(Exception):
    """Base class for every error raised by this package."""


class InstanceError(CrossedBimoduleError, ValueError):
    """An input file violates the schema or references something unknown."""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class DimensionMismatch(CrossedBimoduleError, ValueError):
    pass


class FieldMismatch(CrossedBimoduleError, ValueError):
    pass


class NotInvertibleError(CrossedBimoduleError, ArithmeticError):
    pass


class NotAMorphismError(CrossedBimoduleError, ValueError):
    """Coordinates handed in as a morphism do not satisfy its defining equation."""


class PreconditionError(CrossedBimoduleError):
    """A mathematical precondition (separability, roots of unity, ...) is unmet."""


class VerificationError(CrossedBimoduleError, RuntimeError):
    """A property that must hold after a computation failed to hold."""

    def __init__(self, message: str, instance: Optional[dict] = None):
        self.instance = instance or {}
        super().__init__(message)
