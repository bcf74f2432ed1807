class QuasiHelixError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(QuasiHelixError, ValueError):
    """A precondition on an argument does not hold."""


class SingularInputError(QuasiHelixError, ArithmeticError):
    """A division by an exact zero was requested (e.g. S₀(t) = 0)."""

    def __init__(self, message: str, index=None):
        super().__init__(message)
        self.index = index


class ExportError(QuasiHelixError, OSError):
    """An output sink could not be written."""
