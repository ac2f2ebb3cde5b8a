"""Exception hierarchy.

User-facing input problems derive from ``ValueError``; ``InternalInconsistency``
marks a violated mathematical identity and should never fire on valid input.
"""


class HarmonicIndexError(Exception):
    pass


class DivisionByZero(HarmonicIndexError, ZeroDivisionError):
    pass


class UndefinedGcd(HarmonicIndexError, ValueError):
    pass


class InexactDivision(HarmonicIndexError, ValueError):
    pass


class BadReversalBound(HarmonicIndexError, ValueError):
    pass


class UndefinedValuation(HarmonicIndexError, ValueError):
    pass


class LiteralSyntaxError(HarmonicIndexError, ValueError):
    pass


class DegenerateCurve(HarmonicIndexError, ValueError):
    pass


class ArityMismatch(HarmonicIndexError, ValueError):
    pass


class DegenerateMap(HarmonicIndexError, ValueError):
    pass


class BadLevel(HarmonicIndexError, ValueError):
    pass


class NotFull(HarmonicIndexError, ValueError):
    pass


class NotApplicable(HarmonicIndexError, ValueError):
    pass


class InvalidDirectrix(HarmonicIndexError, ValueError):
    pass


class InternalInconsistency(HarmonicIndexError, AssertionError):
    pass
