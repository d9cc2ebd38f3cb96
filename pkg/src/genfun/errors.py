"""Exception types raised across the package."""


class GenfunError(Exception):
    """Base class for every error raised by genfun."""


class DegenerateInput(GenfunError, ValueError):
    pass


class FieldMismatch(GenfunError, ValueError):
    pass


class NonRealSurd(GenfunError, ValueError):
    pass


class UnboundVariable(GenfunError, LookupError):
    pass


class LengthMismatch(GenfunError, ValueError):
    pass


class NonInvertibleSeries(GenfunError, ValueError):
    pass


class TruncationExceeded(GenfunError, IndexError):
    pass


class RepeatedRoot(GenfunError, ValueError):
    pass


class DegenerateDenominator(GenfunError, ValueError):
    pass


class DivergentArgument(GenfunError, ValueError):
    pass


class UnknownEntry(GenfunError, LookupError):
    pass


class InvalidParameter(GenfunError, ValueError):
    pass


class InvalidSpec(GenfunError, ValueError):
    pass


class ParseError(GenfunError, ValueError):
    """Syntax error in a polynomial or spec document, with a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
