"""Exception types raised across factorlab."""


class FactorLabError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(FactorLabError, ValueError):
    pass


class InvalidStateError(FactorLabError, RuntimeError):
    pass


class SizeLimitError(FactorLabError, ValueError):
    """Raised when an exhaustive enumeration would exceed the configured order cap."""


class InsufficientEdgesError(FactorLabError, ValueError):
    """Raised when no admissible vertex deletion leaves at least ``m`` edges."""


class ParseError(FactorLabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
