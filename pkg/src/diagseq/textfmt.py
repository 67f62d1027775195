"""Shared text formats.

Partitions and diagonal sequences are comma-separated decimals with no
spaces (``8,6,4,3``); the empty string is the empty sequence.  Multisets
are comma-separated ``value`` or ``value^multiplicity`` terms (``6^2,7,8``).
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import DiagseqError

_INT = re.compile(r"-?\d+\Z")


class ParseError(DiagseqError):
    def __init__(self, token: str, what: str):
        self.token = token
        super().__init__(f"bad {what} token {token!r}")


def format_seq(seq: Sequence[int]) -> str:
    return ",".join(str(x) for x in seq)


def parse_ints(text: str, what: str = "integer") -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        if not _INT.match(tok):
            raise ParseError(tok, what)
        out.append(int(tok))
    return tuple(out)


def parse_partition(text: str):
    from .partition import Partition

    return Partition(parse_ints(text, "partition"))


def parse_diagonal(text: str):
    from .partition import DiagonalSequence

    return DiagonalSequence(parse_ints(text, "diagonal"))


def parse_multiset(text: str):
    from .counting import VnMultiset

    values: list[int] = []
    text = text.strip()
    if not text:
        return VnMultiset(0, ())
    for term in text.split(","):
        value, sep, mult = term.partition("^")
        if not _INT.match(value) or (sep and not re.fullmatch(r"\d+", mult)):
            raise ParseError(term, "multiset")
        count = int(mult) if sep else 1
        if count < 1:
            raise ParseError(term, "multiset")
        values.extend([int(value)] * count)
    return VnMultiset.from_values(values)


def format_multiset(m) -> str:
    terms = []
    for i, b in enumerate(m.mults):
        if b == 1:
            terms.append(str(m.base + i))
        elif b > 1:
            terms.append(f"{m.base + i}^{b}")
    return ",".join(terms)


__all__ = [
    "ParseError",
    "format_multiset",
    "format_seq",
    "parse_diagonal",
    "parse_ints",
    "parse_multiset",
    "parse_partition",
]
