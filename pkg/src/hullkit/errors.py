class HullkitError(ValueError):
    """Base class for the package's input errors."""


class EmptyInput(HullkitError):
    pass


class TooLarge(HullkitError):
    pass


class CapExceeded(HullkitError):
    pass


class InvalidH(HullkitError):
    pass


class PointParseError(HullkitError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
