"""Exception hierarchy shared by every module of the package."""


class MalcevError(Exception):
    """Base class for all errors raised by :mod:`malcev`."""


class DimensionMismatch(MalcevError, ValueError):
    pass


class ZeroPolynomial(MalcevError, ValueError):
    pass


class AlgebraMismatch(MalcevError, ValueError):
    pass


class NotAnIdeal(MalcevError):
    pass


class NotMalcev(MalcevError):
    pass


class NotDirect(MalcevError):
    """Raised when an operation needs the projection onto N but A != N + J directly."""


class NotIIdeal(MalcevError):
    pass


class NotInN(MalcevError):
    """Internal consistency failure: a bracket with an element of N left N."""


class NotASubalgebra(MalcevError):
    pass


class NotNilpotent(MalcevError):
    pass


class NotInsideN(MalcevError):
    pass


class HMismatch(MalcevError):
    pass


class ParseError(MalcevError, ValueError):
    pass


class DuplicatePair(ParseError):
    pass


class UnknownBasisLabel(ParseError):
    pass


class SelfBracket(ParseError):
    pass


class MalformedRational(ParseError):
    pass
