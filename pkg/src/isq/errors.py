from __future__ import annotations


class IsqError(Exception):
    """Base class for errors raised by this package."""


class InputError(IsqError, ValueError):
    """Malformed input: unknown element, bad table, bad word syntax, ..."""


class SizeLimitError(IsqError):
    """An exhaustive algorithm was asked to run on a structure above the size cap."""


class NotNormalError(IsqError):
    pass


class NotInductiveError(IsqError):
    pass


class NoRestrictionError(IsqError):
    pass


class InvalidPairError(IsqError):
    pass


class NotStarInjectiveError(IsqError):
    pass
