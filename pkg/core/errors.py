class FenceError(Exception):
    """Base class for every error raised on fence diagrams, fronts and files."""


class RangeError(FenceError):
    pass


class ParseError(FenceError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line   = line
        self.column = column


class NotApplicable(FenceError):
    pass


class BadTarget(FenceError):
    pass


class BadSplit(FenceError):
    pass


class NotConnected(FenceError):
    pass


class NotAnnulus(FenceError):
    pass


class InvalidFront(FenceError):
    pass


class TooLarge(FenceError):
    pass
