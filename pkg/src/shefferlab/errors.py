"""Exception hierarchy shared by every module."""


class ShefferLabError(Exception):
    """Base class for all errors raised by shefferlab."""


class TruncationExhausted(ShefferLabError):
    """A computation needs coefficients beyond the available truncation order."""


class NotInvertible(ShefferLabError):
    pass


class ValuationMismatch(ShefferLabError):
    pass


class CompositionRequiresDelta(ShefferLabError):
    pass


class ReversionRequiresDelta(ShefferLabError):
    pass


class BadConstantTerm(ShefferLabError):
    pass


class NotDivisibleByX(ShefferLabError):
    pass


class BadFamilyParams(ShefferLabError):
    pass


class BadInstance(ShefferLabError):
    pass


class BadRational(ShefferLabError, ValueError):
    """Text could not be parsed as a canonical rational."""
