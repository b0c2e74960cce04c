"""Exception types raised across the package."""


class NilrevError(Exception):
    """Base class for all package errors."""


class ZeroInverse(NilrevError, ZeroDivisionError):
    pass


class DimensionMismatch(NilrevError, ValueError):
    pass


class RingMismatch(NilrevError, ValueError):
    pass


class NotNilpotentUpper(NilrevError, ValueError):
    """Matrix has a nonzero entry on or below the diagonal."""


class NotSignedUnipotent(NilrevError, ValueError):
    """Matrix is not upper triangular with diagonal entries +1/-1."""


class NotUnipotent(NilrevError, ValueError):
    pass


class NotStar(NilrevError, ValueError):
    """Some first-superdiagonal entry is zero."""


class NotAReverser(NilrevError, ValueError):
    pass


class NotApplicable(NilrevError, ValueError):
    pass


class ZeroInput(NilrevError, ValueError):
    pass


class WitnessViolation(NilrevError, AssertionError):
    """Block structure of a reverser in the ordered basis failed.

    Never raised on valid input; seeing it means an implementation bug.
    """


class InternalInvariantError(NilrevError, AssertionError):
    pass


class MalformedCertificate(NilrevError, ValueError):
    pass


class DimensionTooLarge(NilrevError, ValueError):
    pass


class ParseError(NilrevError, ValueError):
    """Text input could not be parsed.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super().__init__(where + message)
