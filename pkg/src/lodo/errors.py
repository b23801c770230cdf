"""Exception hierarchy shared by all lodo modules."""


class LodoError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(LodoError):
    """Operands built over different field descriptors."""


class DivisionByZero(LodoError, ZeroDivisionError):
    """Division by a zero scalar, polynomial or rational function."""


class UnsupportedDegree(LodoError):
    """Root finding was asked to certify completeness beyond its dispatch."""


class ParseError(LodoError):
    """Input text does not conform to the operator grammar.

    ``position`` is the byte offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnknownSymbol(ParseError):
    """A name that is neither x, D, the field generator nor a declared parameter."""


class NonIntegerExponent(ParseError):
    """An exponent that is not a nonnegative integer literal."""


class DivisionByZeroOperator(LodoError):
    """Right division by the zero operator."""


class ZeroOperator(LodoError):
    """An operation that needs a nonzero operator received zero."""


class OrderZero(LodoError):
    """Companion matrix of an operator of order < 1."""


class BadDimension(LodoError):
    """Matrix dimensions unsuitable for the requested construction."""


class NoCyclicVectorFound(LodoError):
    """The cyclic covector policy exhausted its candidate budget."""


class IncompleteSearch(LodoError):
    """An empirical bound was requested but the certificate search is incomplete."""


class NotADivisor(LodoError):
    """The claimed right-hand divisor does not divide, or has full order."""


class UnsupportedOrderGap(LodoError):
    """right_factor only searches orders 1 and ord(L) - 1."""


class UnsupportedOrder(LodoError):
    """Irreducibility testing is implemented for orders 1..3 only."""


class NotWellDefined(LodoError):
    """A specialization point hits a denominator or kills the leading coefficient."""


class BadOrder(LodoError):
    """generic_division needs 1 <= s < ord(L) and nu >= 0."""
