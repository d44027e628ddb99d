"""Shared exception types.

Everything raised on purpose by this package derives from SkeinAlgError so
callers (and the CLI) can tell engine errors from ordinary Python bugs.
"""


class SkeinAlgError(Exception):
    """Base class for all errors raised by skeinalg."""


class NotAUnit(SkeinAlgError):
    """Division requested by a Laurent polynomial that is not +-t^k."""


class NotInQ(SkeinAlgError):
    """A t-Laurent polynomial has an exponent not divisible by 4."""


class DegreeTooHigh(SkeinAlgError):
    """An element's y-degree exceeds the range the reduction rules cover."""


class NonUnitLeadingCoefficient(SkeinAlgError):
    """A reduction rule cannot be solved because the top coefficient is not a unit."""


class InvalidKey(SkeinAlgError):
    """A skein-family key with an out-of-range family/index/power."""


class SeedsMissing(SkeinAlgError):
    """The action engine was given an incomplete generator seed table."""


class InvariantViolation(SkeinAlgError):
    """An internal consistency check failed (parity, degree bound, ...)."""


class ParseError(SkeinAlgError):
    """Text could not be parsed.

    Carries the 0-based offset of the offending token and the set of token
    kinds that would have been acceptable there.
    """

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.expected = tuple(expected)
