"""Exception hierarchy.

Everything raised for bad input derives from :class:`DiagseqError`, which
is a ``ValueError`` so callers that only care about "bad value" can catch
that instead.
"""

from __future__ import annotations


class DiagseqError(ValueError):
    pass


class NotSorted(DiagseqError):
    def __init__(self, index: int, raw):
        self.index = index
        super().__init__(f"parts not non-increasing at position {index}: {tuple(raw)}")


class NonPositivePart(DiagseqError):
    def __init__(self, index: int, value: int):
        self.index = index
        super().__init__(f"part {index} is {value}, parts must be positive")


class WeightTooLarge(DiagseqError):
    pass


class BadShape(DiagseqError):
    """A sequence that cannot be a diagonal sequence.

    ``index`` is the first offending 1-based position ``k``.
    """

    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"not a diagonal sequence at k={index}: {reason}")


class NotStrict(DiagseqError):
    pass


class InvalidPeel(DiagseqError):
    pass


class WeightMismatch(DiagseqError):
    pass


class EmptyStratum(DiagseqError):
    def __init__(self, k: int, a1):
        self.k = k
        self.a1 = tuple(a1)
        super().__init__(f"no class member has {k} parts; A1 = {{{','.join(map(str, self.a1))}}}")


class BoundExceeded(DiagseqError):
    pass


class CapExceeded(DiagseqError):
    """Enumeration refused; ``count`` is the exact size that was requested."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"class has {count} members, above the enumeration cap {cap}")
