"""Majorization extremes of a diagonal-sequence class and its strata.

Within a class every partition lies between the strictly decreasing member
(cells pushed as far up their diagonals as possible) and its conjugate.
The same holds stratum by stratum once the number of parts is fixed; the
constructions below peel the first column off and recurse on the smaller
diagonal sequence that remains.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence

from .errors import DiagseqError, EmptyStratum, InvalidPeel, NotStrict, WeightMismatch
from .partition import (
    DiagonalSequence,
    Partition,
    SProfile,
    conjugate,
    to_s_profile,
)


class A1Set(tuple):
    """Admissible largest parts (equivalently part counts) of a class, ascending."""

    __slots__ = ()

    def __str__(self):
        return "{" + ",".join(map(str, self)) + "}"


def alpha_bar(sp: SProfile) -> Partition:
    q = sp.peak
    return Partition(q - i + 1 + sum(sp.repeats[i - 1:]) for i in range(1, q + 1))


def alpha_under(sp: SProfile) -> Partition:
    parts = []
    for j in range(sp.peak, 0, -1):
        parts.extend([j] * (sp.s(j) + 1))
    return Partition(parts)


def s_from_strict(p: Sequence[int]) -> SProfile:
    """Recover the profile from the strictly decreasing member of a class."""
    p = Partition(p)
    if not p:
        raise DiagseqError("the empty partition has no profile")
    for i in range(len(p) - 1):
        if p[i] == p[i + 1]:
            raise NotStrict(f"parts {i + 1} and {i + 2} are both {p[i]}")
    q = len(p)
    repeats = [p[i] - p[i + 1] - 1 for i in range(q - 1)] + [p[-1] - 1]
    return SProfile(q, tuple(repeats))


def a1_set(d: Sequence[int]) -> A1Set:
    """``{q, q+s_q, q+s_q+s_{q-1}, ..., q+sum(s)}``.

    The empty sequence gives ``{0}``: its only member has no parts.
    """
    d = DiagonalSequence(d)
    if not d:
        return A1Set((0,))
    sp = to_s_profile(d)
    q = sp.peak
    values = accumulate(reversed(sp.repeats), initial=q)
    return A1Set(sorted(set(values)))


def peel_first_row(d: Sequence[int], k: int) -> DiagonalSequence:
    """Diagonal sequence left after removing a first row (or column) of length ``k``.

    ``(d_2-1, ..., d_k-1, d_{k+1}, ..., d_L)`` with trailing zeros trimmed.
    """
    d = DiagonalSequence(d)
    if k not in a1_set(d) or k == 0:
        raise InvalidPeel(f"cannot remove a row of length {k} from {tuple(d)}; A1 = {a1_set(d)}")
    return DiagonalSequence([x - 1 for x in d[1:k]] + list(d[k:]))


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Zero-padded prefix-sum dominance of ``a`` over ``b``."""
    if sum(a) != sum(b):
        raise WeightMismatch(f"weights differ: {sum(a)} vs {sum(b)}")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def _require_stratum(d: DiagonalSequence, k: int) -> None:
    a1 = a1_set(d)
    if k not in a1:
        raise EmptyStratum(k, a1)


def stratum_max(d: Sequence[int], k: int) -> Partition:
    """Majorization maximum among class members with exactly ``k`` parts."""
    d = DiagonalSequence(d)
    _require_stratum(d, k)
    if not d:
        return Partition()
    rest = peel_first_row(d, k)
    top = alpha_bar(to_s_profile(rest)) if rest else Partition()
    assert len(top) <= k
    return Partition([x + 1 for x in top] + [1] * (k - len(top)))


def greedy_largest_part_max(d: Sequence[int], k: int) -> Partition:
    """Majorization maximum among class members whose largest part is ``k``.

    Start with a row of length ``k``; each following row takes the largest
    admissible length not exceeding the previous one.
    """
    d = DiagonalSequence(d)
    _require_stratum(d, k)
    rows = []
    cur = d
    part = k
    while cur:
        rows.append(part)
        cur = peel_first_row(cur, part)
        if not cur:
            break
        fits = [x for x in a1_set(cur) if x <= part]
        if not fits:
            raise DiagseqError(f"greedy construction stuck at {rows} for {tuple(d)}")
        part = fits[-1]
    return Partition(rows)


def stratum_min(d: Sequence[int], k: int) -> Partition:
    """Majorization minimum among class members with exactly ``k`` parts."""
    return conjugate(greedy_largest_part_max(d, k))


__all__ = [
    "A1Set",
    "a1_set",
    "alpha_bar",
    "alpha_under",
    "greedy_largest_part_max",
    "majorizes",
    "peel_first_row",
    "s_from_strict",
    "stratum_max",
    "stratum_min",
]
