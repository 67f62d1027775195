"""Closed-form counts: vn-arrangements, stratum sizes and class sizes.

All results are Python ints, so nothing overflows or rounds.  Binomials
vanish outside ``0 <= r <= n``; several formulas rely on that to switch a
stratum off when its part count is not admissible.

Indexing follows the drop vector of a diagonal sequence ``d`` with peak
``q`` and length ``L``: ``b_i = d_i - d_{i+1}`` for ``q <= i < L`` and
``b_L = d_L``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DiagseqError
from .extremal import a1_set, alpha_bar
from .kernels import distinct_partition_numbers
from .partition import DiagonalSequence, to_s_profile, v_sequence


def binomial(n: int, r: int) -> int:
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(counts: Iterable[int]) -> int:
    total = 0
    out = 1
    for c in counts:
        total += c
        out *= binomial(total, c)
    return out


@dataclass(frozen=True)
class VnMultiset:
    """``{a^(b_0), (a+1)^(b_1), ..., (a+t)^(b_t)}`` with ``b_0, b_t > 0`` unless empty."""

    base: int
    mults: tuple[int, ...]

    def __post_init__(self):
        mults = [int(b) for b in self.mults]
        if any(b < 0 for b in mults):
            raise DiagseqError(f"negative multiplicity in {mults}")
        base = int(self.base)
        while mults and mults[0] == 0:
            mults.pop(0)
            base += 1
        while mults and mults[-1] == 0:
            mults.pop()
        if not mults:
            base = 0
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mults", tuple(mults))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "VnMultiset":
        c = Counter(int(v) for v in values)
        if not c:
            return cls(0, ())
        lo, hi = min(c), max(c)
        return cls(lo, tuple(c.get(v, 0) for v in range(lo, hi + 1)))

    @property
    def size(self) -> int:
        return sum(self.mults)

    @property
    def span(self) -> int:
        """Number of consecutive values covered, ``t + 1``."""
        return len(self.mults)

    def values(self) -> tuple[int, ...]:
        out = []
        for i, b in enumerate(self.mults):
            out.extend([self.base + i] * b)
        return tuple(out)


def vn_count(m: VnMultiset) -> int:
    """Orderings of ``m`` in which no step rises by more than 1."""
    b = m.mults
    out = 1
    for i in range(len(b) - 1):
        out *= binomial(b[i] + b[i + 1], b[i])
    return out


def kvn_count(m: VnMultiset, k: int) -> int:
    """Orderings of ``m`` in which no step rises by more than ``k``."""
    if k < 0:
        raise DiagseqError("k must be non-negative")
    b = m.mults
    t = len(b) - 1
    if t < k:
        return multinomial(b)
    out = multinomial(b[: k + 1])
    for i in range(1, t - k + 1):
        out *= binomial(sum(b[i : i + k + 1]), b[i + k])
    return out


@dataclass(frozen=True)
class BVector:
    """Drops ``b_q, ..., b_L`` of a diagonal sequence past its peak."""

    start: int
    values: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        """1-based diagonal index ``i``; zero outside ``start..end``."""
        if self.start <= i <= self.end:
            return self.values[i - self.start]
        return 0


def b_vector(d: Sequence[int]) -> BVector:
    d = DiagonalSequence(d)
    if not d:
        return BVector(0, ())
    q, L = d.peak, len(d)
    drops = [d[i - 1] - d[i] for i in range(q, L)] + [d[L - 1]]
    return BVector(q, tuple(drops))


def vbar_multiset(d: Sequence[int]) -> VnMultiset:
    """Row ends ``v_i = a_i + i - 1`` of the strictly decreasing class member."""
    return VnMultiset.from_values(v_sequence(alpha_bar(to_s_profile(DiagonalSequence(d)))))


def count_stratum(d: Sequence[int], k: int) -> int:
    """Class members with exactly ``k`` parts (0 when ``k`` is not admissible)."""
    d = DiagonalSequence(d)
    if not d:
        return 1 if k == 0 else 0
    q, L = d.peak, len(d)
    if k < q or k > L:
        return 0
    b = b_vector(d)
    if k == q:
        out = 1
        for i in range(q, L):
            out *= binomial(b[i] + b[i + 1], b[i])
        return out
    out = binomial(b[k - 1] + b[k], b[k - 1] + 1)
    for i in range(q, k - 1):
        out *= binomial(b[i] + b[i + 1] + 1, b[i] + 1)
    for i in range(k, L):
        out *= binomial(b[i] + b[i + 1], b[i])
    return out


def stratum_counts(d: Sequence[int]) -> dict[int, int]:
    return {k: count_stratum(d, k) for k in a1_set(d)}


def class_factors(d: Sequence[int]) -> list[int]:
    """Factors ``C(b_i + b_{i+1} + 1, b_i + 1)`` for ``i = q .. L-1``."""
    d = DiagonalSequence(d)
    if not d:
        return []
    b = b_vector(d)
    return [binomial(b[i] + b[i + 1] + 1, b[i] + 1) for i in range(d.peak, len(d))]


def count_class(d: Sequence[int]) -> int:
    """Number of partitions with diagonal sequence ``d``."""
    return math.prod(class_factors(d))


def count_distinct_classes(n: int) -> int:
    """Number of distinct diagonal sequences of weight ``n``."""
    if n < 0:
        raise DiagseqError("n must be non-negative")
    return distinct_partition_numbers(n)[n]


def _factorizations(m: int, largest: int | None = None):
    """Multisets of factors >= 2 with product ``m``, each non-increasing."""
    if m == 1:
        yield ()
        return
    largest = m if largest is None else largest
    for f in range(min(m, largest), 1, -1):
        if m % f == 0:
            for rest in _factorizations(m // f, f):
                yield (f,) + rest


def _isolated_drop_sequence(factors: Sequence[int]) -> tuple[int, ...]:
    # Nonzero drops sit at q+1, q+3, ..., L with a zero drop between each
    # pair, so the class size is prod(b_i + 1) = prod(factors).
    q = sum(f - 1 for f in factors)
    values = list(range(1, q + 1)) + [q]
    level = q
    for f in factors[:-1]:
        level -= f - 1
        values += [level, level]
    return tuple(values)


def class_of_size(m: int) -> DiagonalSequence:
    """A diagonal sequence whose class has exactly ``m`` members.

    Built from a factorization of ``m`` into isolated drops; among all
    factorizations (factors taken largest first, which minimises weight)
    the one of smallest weight wins, ties broken lexicographically.
    """
    if m < 1:
        raise DiagseqError("m must be positive")
    if m == 1:
        return DiagonalSequence((1,))
    best = min(
        (_isolated_drop_sequence(fs) for fs in _factorizations(m)),
        key=lambda d: (sum(d), d),
    )
    d = DiagonalSequence(best)
    assert count_class(d) == m
    return d


__all__ = [
    "BVector",
    "VnMultiset",
    "b_vector",
    "binomial",
    "class_factors",
    "class_of_size",
    "count_class",
    "count_distinct_classes",
    "count_stratum",
    "kvn_count",
    "multinomial",
    "stratum_counts",
    "vbar_multiset",
    "vn_count",
]
