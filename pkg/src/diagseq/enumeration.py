"""Explicit generation of partitions, arrangements and class members.

:func:`classes_oracle` is the independent referee: it walks every partition
of ``n`` and groups them by diagonal sequence, touching none of the
counting formulas or the peel recursion used by :func:`enumerate_class`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .counting import VnMultiset, count_class, vbar_multiset
from .errors import BoundExceeded, CapExceeded, DiagseqError
from .extremal import a1_set, peel_first_row, s_from_strict
from .partition import DiagonalSequence, Partition, from_s_profile, partition_from_v
from .textfmt import format_seq

PARTITION_BOUND = 60
ARRANGEMENT_BOUND = 12
ORACLE_BOUND = 30
DEFAULT_ENUM_CAP = 10**6


def enum_cap() -> int:
    """Enumeration cap, overridable through ``DIAGSEQ_MAX_ENUM``."""
    raw = os.environ.get("DIAGSEQ_MAX_ENUM")
    if not raw:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise DiagseqError(f"DIAGSEQ_MAX_ENUM must be an integer, got {raw!r}") from None


def _partitions_below(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_below(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, bound: int = PARTITION_BOUND) -> Iterator[Partition]:
    """Every partition of ``n`` once, in descending lexicographic order."""
    if n < 0:
        raise DiagseqError("n must be non-negative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the partition enumeration bound {bound}")
    for p in _partitions_below(n, n):
        yield Partition(p)


def _strict_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            yield (first,) + rest


def enumerate_diagonals(n: int) -> list[DiagonalSequence]:
    """All diagonal sequences of weight ``n``, one per distinct-part partition, sorted."""
    if n < 0:
        raise DiagseqError("n must be non-negative")
    if n == 0:
        return [DiagonalSequence()]
    out = [from_s_profile(s_from_strict(p)) for p in _strict_partitions(n, n)]
    return sorted(out)


def enumerate_kvn(m: VnMultiset, k: int, bound: int = ARRANGEMENT_BOUND) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of ``m`` with every rise ``<= k``, lexicographic."""
    if k < 0:
        raise DiagseqError("k must be non-negative")
    if m.size > bound:
        raise BoundExceeded(f"multiset of size {m.size} exceeds the arrangement bound {bound}")
    remaining = list(m.mults)
    out: list[int] = []
    size = m.size

    def walk():
        if len(out) == size:
            yield tuple(m.base + i for i in out)
            return
        for i, left in enumerate(remaining):
            if not left or (out and i - out[-1] > k):
                continue
            remaining[i] -= 1
            out.append(i)
            yield from walk()
            out.pop()
            remaining[i] += 1

    yield from walk()


def enumerate_vn(m: VnMultiset, bound: int = ARRANGEMENT_BOUND) -> Iterator[tuple[int, ...]]:
    return enumerate_kvn(m, 1, bound)


@lru_cache(maxsize=None)
def _stratum(d: tuple[int, ...], k: int) -> tuple[Partition, ...]:
    # Members with k parts <-> (beta + 1, 1^(k - l)) for beta in the
    # l-part stratum of the peeled sequence, l <= k.
    if not d:
        return (Partition(),) if k == 0 else ()
    if k == 0 or k not in a1_set(d):
        return ()
    rest = peel_first_row(d, k)
    out = []
    for l in a1_set(rest):
        if l > k:
            break
        for beta in _stratum(tuple(rest), l):
            out.append(Partition([x + 1 for x in beta] + [1] * (k - l)))
    out.sort(reverse=True)
    return tuple(out)


def enumerate_stratum(d: Sequence[int], k: int) -> list[Partition]:
    """Class members with exactly ``k`` parts, descending lexicographic."""
    return list(_stratum(tuple(DiagonalSequence(d)), k))


def enumerate_peak_stratum_vn(d: Sequence[int], bound: int = ARRANGEMENT_BOUND) -> list[Partition]:
    """The ``q``-part stratum via arrangements of the row ends of the strict member.

    Each arrangement ``v`` decodes to the partition ``v_i - i + 1``.
    """
    d = DiagonalSequence(d)
    if not d:
        return [Partition()]
    out = [partition_from_v(v) for v in enumerate_vn(vbar_multiset(d), bound)]
    out.sort(reverse=True)
    return out


def enumerate_class(d: Sequence[int], cap: int | None = None) -> list[Partition]:
    """All members of the class, grouped by part count ascending."""
    d = DiagonalSequence(d)
    cap = enum_cap() if cap is None else cap
    total = count_class(d)
    if total > cap:
        raise CapExceeded(total, cap)
    out = []
    for k in a1_set(d):
        out.extend(_stratum(tuple(d), k))
    return out


@dataclass(frozen=True)
class ClassTable:
    """Partitions of ``n`` grouped by diagonal sequence."""

    n: int
    entries: Mapping[DiagonalSequence, tuple[Partition, ...]]

    def __len__(self):
        return len(self.entries)

    def total(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def records(self) -> list[dict]:
        return [class_record(d, members, self.n) for d, members in sorted(self.entries.items())]

    def dumps(self) -> str:
        return dump_records(self.records())


def class_record(d: Sequence[int], members: Iterable[Sequence[int]], n: int | None = None) -> dict:
    members = [format_seq(p) for p in members]
    return {
        "d": format_seq(d),
        "n": sum(d) if n is None else n,
        "count": str(len(members)),
        "members": members,
    }


def dump_records(records: Iterable[dict]) -> str:
    """One JSON object per line, LF terminated."""
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)


def load_records(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@lru_cache(maxsize=64)
def _oracle_groups(n: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]], ...]:
    parts = kernels.partitions_array(n)
    diags = kernels.diagonal_batch(parts)
    if diags.shape[1] == 0:
        return (((), ((),)),)
    keys, inverse = np.unique(diags, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    groups: dict[int, list[tuple[int, ...]]] = {}
    for row, g in enumerate(inverse.tolist()):
        groups.setdefault(g, []).append(tuple(x for x in parts[row].tolist() if x))
    out = []
    for g, members in groups.items():
        key = tuple(x for x in keys[g].tolist() if x)
        out.append((key, tuple(members)))
    return tuple(out)


def classes_oracle(n: int, bound: int = ORACLE_BOUND) -> ClassTable:
    """Brute force: every partition of ``n``, grouped by its diagonal sequence."""
    if n < 0:
        raise DiagseqError("n must be non-negative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the oracle bound {bound}")
    entries = {
        DiagonalSequence(d): tuple(Partition(p) for p in members)
        for d, members in _oracle_groups(n)
    }
    return ClassTable(n, MappingProxyType(entries))


__all__ = [
    "ARRANGEMENT_BOUND",
    "ClassTable",
    "DEFAULT_ENUM_CAP",
    "ORACLE_BOUND",
    "PARTITION_BOUND",
    "class_record",
    "classes_oracle",
    "dump_records",
    "enum_cap",
    "enumerate_class",
    "enumerate_diagonals",
    "enumerate_kvn",
    "enumerate_partitions",
    "enumerate_peak_stratum_vn",
    "enumerate_stratum",
    "enumerate_vn",
    "load_records",
]
