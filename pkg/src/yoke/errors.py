"""Exception hierarchy shared by every module of the package."""


class YokeError(ValueError):
    """Base class for all errors raised by :mod:`yoke`."""


class WrongLength(YokeError):
    pass


class MiddleEntryOutOfRange(YokeError):
    pass


class SumNotDivisible(YokeError):
    pass


class TooLarge(YokeError):
    """The requested graph exceeds the configured vertex cap."""


class ParamMismatch(YokeError):
    pass


class KindMismatch(YokeError):
    pass


class NotAPivot(YokeError):
    pass


class OutOfRegime(YokeError):
    """The parameters lie outside the range where an operation is defined."""


class IndexOutOfRange(YokeError):
    pass


class Unsupported(YokeError):
    """The question is open (no theorem covers these parameters)."""


class LengthMismatch(YokeError):
    pass


class InvalidTriangulation(YokeError):
    pass


class IllegalFlip(YokeError):
    pass


class NotAPermutation(YokeError):
    pass


class NotArcPermutation(YokeError):
    pass


class InvalidCaterpillar(YokeError):
    pass
