class TarskiError(Exception):
    pass


class InputError(TarskiError, ValueError):
    """A precondition on the arguments of an operation does not hold."""


class DomainError(InputError):
    pass


class OutsideDiskError(InputError):
    """Raised when a Klein point would lie on or outside the unit circle."""

    def __init__(self, coords, norm2):
        self.coords = coords
        self.norm2 = norm2
        super().__init__(f"point {coords} has squared norm {norm2} >= 1")


class NotCheckableError(TarskiError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
