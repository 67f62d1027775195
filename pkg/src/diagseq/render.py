"""Text Young diagrams annotated by diagonal.

``index`` mode writes in each cell its position along its anti-diagonal,
counted from the top; ``letter`` mode writes one letter per anti-diagonal
(``a`` for the first, wrapping after ``z``).
"""

from __future__ import annotations

from string import ascii_lowercase
from typing import Sequence

from .partition import v_sequence


def _index_cells(p: Sequence[int]) -> list[list[int]]:
    v = v_sequence(p)
    rows = []
    for i, a in enumerate(p):
        row = []
        for j in range(a):
            k = i + j + 1  # 1-based anti-diagonal; v holds 1-based row ends
            row.append(sum(1 for r in range(i + 1) if v[r] >= k))
        rows.append(row)
    return rows


def render_diagram(p: Sequence[int], mode: str = "index") -> str:
    if mode == "letter":
        lines = [
            "".join(ascii_lowercase[(i + j) % 26] for j in range(a)) for i, a in enumerate(p)
        ]
    elif mode == "index":
        cells = _index_cells(p)
        width = max((len(str(c)) for row in cells for c in row), default=1)
        if width == 1:
            lines = ["".join(str(c) for c in row) for row in cells]
        else:
            lines = [" ".join(str(c).rjust(width) for c in row) for row in cells]
    else:
        raise ValueError(f"unknown render mode {mode!r}")
    return "".join(line + "\n" for line in lines)


__all__ = ["render_diagram"]
