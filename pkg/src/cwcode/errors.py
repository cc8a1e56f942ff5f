"""Exception hierarchy shared by all cwcode modules."""


class CwCodeError(Exception):
    """Base class for every error raised by this package."""


# finite fields
class NotAPrimePower(CwCodeError, ValueError):
    pass


class TooLarge(CwCodeError, ValueError):
    pass


class DivisionByZero(CwCodeError, ZeroDivisionError):
    pass


class FieldMismatch(CwCodeError, TypeError):
    pass


# matrices and codes
class DimensionMismatch(CwCodeError, ValueError):
    pass


class ValueOutOfField(CwCodeError, ValueError):
    pass


class IndexOutOfRange(CwCodeError, IndexError):
    pass


class DimOutOfRange(CwCodeError, ValueError):
    pass


class ZeroDimensionalCode(CwCodeError, ValueError):
    pass


class NonIntegralHierarchy(CwCodeError, ValueError):
    pass


class EnumerationTooLarge(CwCodeError, ValueError):
    pass


# matroids and resolutions
class GroundSetTooLarge(CwCodeError, ValueError):
    pass


class FreeMatroid(CwCodeError, ValueError):
    pass


class OutOfRange(CwCodeError, ValueError):
    pass


class NonIntegralDegree(CwCodeError, ValueError):
    pass


class ImpureTable(CwCodeError, ValueError):
    pass


# file input
class ParseError(CwCodeError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RaggedMatrix(ParseError):
    pass
