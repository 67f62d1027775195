"""Partitions, conjugation and the diagonal-sequence invariant.

A partition's diagonal sequence counts the cells on each anti-diagonal of
its Young diagram: ``d[k-1]`` is the number of rows ``i <= k`` with
``parts[i-1] + i - 1 >= k``.  Every diagonal sequence rises 1, 2, ..., q and
then never rises again, so it is equivalently described by its peak ``q``
and how many extra times each value ``1..q`` repeats after the peak
(:class:`SProfile`).

Indices in docstrings are 1-based to match the usual notation; the Python
containers are of course 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadShape, DiagseqError, NonPositivePart, NotSorted, WeightTooLarge

MAX_WEIGHT = 10**9


class Partition(tuple):
    """Non-increasing tuple of positive ints.  ``Partition(())`` is the partition of 0."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x <= 0:
                raise NonPositivePart(i + 1, x)
            if i and x > parts[i - 1]:
                raise NotSorted(i + 1, parts)
        if sum(parts) > MAX_WEIGHT:
            raise WeightTooLarge(f"weight {sum(parts)} exceeds {MAX_WEIGHT}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def make_partition(raw: Sequence[int]) -> Partition:
    return Partition(raw)


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: part ``j`` counts parts of ``p`` that are ``>= j``."""
    if not p:
        return Partition()
    out = []
    for j in range(1, p[0] + 1):
        out.append(sum(1 for x in p if x >= j))
    return Partition(out)


class DiagonalSequence(tuple):
    """Validated diagonal sequence with trailing zeros removed.

    ``peak`` is the ``q`` with ``d_k = k`` for ``k <= q`` and no rise after;
    it is 0 only for the empty sequence (the partition of 0).
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(x) for x in values)
        while values and values[-1] == 0:
            values = values[:-1]
        _check_shape(values)
        return super().__new__(cls, values)

    @property
    def peak(self) -> int:
        q = 0
        while q < len(self) and self[q] == q + 1:
            q += 1
        return q

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"DiagonalSequence({tuple(self)!r})"


def _check_shape(values: tuple) -> None:
    rising = True
    for k, dk in enumerate(values, start=1):
        if dk <= 0:
            raise BadShape(k, f"interior entry {dk} is not positive")
        if k == 1:
            if dk != 1:
                raise BadShape(1, f"d_1 must be 1, got {dk}")
            continue
        step = dk - values[k - 2]
        if rising:
            if step == 1:
                continue
            if step > 1:
                raise BadShape(k, f"rises by {step}")
            rising = False
        elif step > 0:
            raise BadShape(k, "rises again after falling")


def validate_diagonal(raw: Sequence[int]) -> DiagonalSequence:
    return DiagonalSequence(raw)


def diagonal_sequence(p: Sequence[int]) -> DiagonalSequence:
    """``d_k = #{ i <= k : p_i + i - 1 >= k }``, trailing zeros dropped."""
    if not p:
        return DiagonalSequence()
    t = len(p)
    out = []
    for k in range(1, p[0] + t):
        out.append(sum(1 for i in range(1, min(k, t) + 1) if p[i - 1] + i - 1 >= k))
    return DiagonalSequence(out)


def v_sequence(p: Sequence[int]) -> tuple[int, ...]:
    """``v_i = p_i + i - 1``: where row ``i`` ends, measured in diagonals."""
    return tuple(x + i for i, x in enumerate(p))


def partition_from_v(v: Sequence[int]) -> Partition:
    return Partition(x - i for i, x in enumerate(v))


@dataclass(frozen=True)
class SProfile:
    """Peak ``q`` plus the repeat counts ``repeats[j-1] = s_j`` for ``j = 1..q``.

    The diagonal sequence is ``1, 2, ..., q`` followed by ``q`` repeated
    ``s_q`` times, then ``q-1`` repeated ``s_{q-1}`` times, down to 1.
    ``repeats`` is stored ascending in ``j`` (s_1 first).
    """

    peak: int
    repeats: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "repeats", tuple(int(s) for s in self.repeats))
        if self.peak < 1:
            raise DiagseqError(f"profile peak must be positive, got {self.peak}")
        if len(self.repeats) != self.peak:
            raise DiagseqError(f"need {self.peak} repeat counts, got {len(self.repeats)}")
        if any(s < 0 for s in self.repeats):
            raise DiagseqError(f"repeat counts must be non-negative: {self.repeats}")

    def s(self, j: int) -> int:
        """1-based accessor, ``s(j) == repeats[j-1]``."""
        return self.repeats[j - 1]

    @property
    def weight(self) -> int:
        q = self.peak
        return q * (q + 1) // 2 + sum(j * s for j, s in enumerate(self.repeats, start=1))

    @property
    def length(self) -> int:
        """Index of the last nonzero diagonal (``q + sum(s)``)."""
        return self.peak + sum(self.repeats)

    @property
    def last_row_end(self) -> int:
        """``q + s_q``; the smallest admissible largest part."""
        return self.peak + self.repeats[-1]


def to_s_profile(d: DiagonalSequence) -> SProfile:
    d = DiagonalSequence(d)
    if not d:
        raise DiagseqError("the empty diagonal sequence has no profile")
    q = d.peak
    repeats = [0] * q
    for x in d[q:]:
        repeats[x - 1] += 1
    return SProfile(q, tuple(repeats))


def from_s_profile(sp: SProfile) -> DiagonalSequence:
    values = list(range(1, sp.peak + 1))
    for j in range(sp.peak, 0, -1):
        values.extend([j] * sp.s(j))
    return DiagonalSequence(values)


def weight(obj) -> int:
    """Weight of a partition, diagonal sequence or profile."""
    if isinstance(obj, SProfile):
        return obj.weight
    return sum(obj)


def sum_squares_pair(p: Sequence[int]) -> int:
    """Sum of squared parts of ``p`` plus that of its conjugate."""
    return sum(x * x for x in p) + sum(x * x for x in conjugate(p))


def diagonal_moment(d: Sequence[int]) -> int:
    return 2 * sum(k * dk for k, dk in enumerate(d, start=1))


__all__ = [
    "DiagonalSequence",
    "MAX_WEIGHT",
    "Partition",
    "SProfile",
    "conjugate",
    "diagonal_moment",
    "diagonal_sequence",
    "from_s_profile",
    "make_partition",
    "partition_from_v",
    "sum_squares_pair",
    "to_s_profile",
    "v_sequence",
    "validate_diagonal",
    "weight",
]
