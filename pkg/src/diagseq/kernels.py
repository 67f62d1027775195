"""Hot loops behind the brute-force oracles.

Each kernel exists twice: a numba-compiled version (``*_nb``) and a pure
numpy/Python version (``*_np``).  The unsuffixed name is bound to one of
them at import time according to :data:`diagseq._jit.USE_NUMBA`.  Both
versions must return identical arrays; ``tests/test_kernels.py`` holds them
to that and ``benchmarks/bench_kernels.py`` times them against each other.

Partitions travel as 2-D ``int64`` arrays, one partition per row, parts in
non-increasing order followed by zero padding.
"""

from __future__ import annotations

import numpy as np

from ._jit import NUMBA_AVAILABLE, USE_NUMBA, njit


def partition_numbers(n: int) -> list[int]:
    """``p(0), ..., p(n)`` by the standard part-size recurrence, exact."""
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            p[m] += p[m - part]
    return p


def distinct_partition_numbers(n: int) -> list[int]:
    """Number of partitions into distinct parts for ``0..n``, exact."""
    q = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(n, part - 1, -1):
            q[m] += q[m - part]
    return q


# -- all partitions of n, descending lexicographic ------------------------


def _fill_partitions(n, out):
    # Zoghbi-Stojmenovic ZS1; x holds 1s past the current last part.
    x = np.ones(n, dtype=np.int64)
    x[0] = n
    m = 0
    h = 0
    row = 0
    for j in range(m + 1):
        out[row, j] = x[j]
    row += 1
    while x[0] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        for j in range(m + 1):
            out[row, j] = x[j]
        row += 1
    return row


_fill_partitions_nb = njit(_fill_partitions)


def _partitions_array(n: int, fill) -> np.ndarray:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    out = np.zeros((partition_numbers(n)[n], n), dtype=np.int64)
    rows = fill(n, out)
    assert rows == out.shape[0]
    return out


def partitions_array_np(n: int) -> np.ndarray:
    return _partitions_array(n, _fill_partitions)


def partitions_array_nb(n: int) -> np.ndarray:
    return _partitions_array(n, _fill_partitions_nb)


# -- diagonal sequences of many partitions at once ------------------------
#
# Row i (0-based) of a Young diagram covers anti-diagonals i .. i+a_i-1, so
# a +1/-1 difference array followed by a prefix sum gives every d_k.


def _diagonal_width(parts: np.ndarray) -> int:
    if parts.size == 0:
        return 0
    nrows = (parts > 0).sum(axis=1)
    return int(max(0, (parts[:, 0] + nrows - 1).max()))


def _diagonal_fill(parts, out):
    nrow, ncol = parts.shape
    for r in range(nrow):
        for i in range(ncol):
            a = parts[r, i]
            if a <= 0:
                break
            out[r, i] += 1
            out[r, i + a] -= 1
        acc = 0
        for k in range(out.shape[1]):
            acc += out[r, k]
            out[r, k] = acc


_diagonal_fill_nb = njit(_diagonal_fill)


def diagonal_batch_np(parts: np.ndarray) -> np.ndarray:
    parts = np.ascontiguousarray(parts, dtype=np.int64)
    width = _diagonal_width(parts)
    diff = np.zeros((parts.shape[0], width + 1), dtype=np.int64)
    rows, cols = np.nonzero(parts > 0)
    np.add.at(diff, (rows, cols), 1)
    np.add.at(diff, (rows, cols + parts[rows, cols]), -1)
    return np.cumsum(diff, axis=1)[:, :width]


def diagonal_batch_nb(parts: np.ndarray) -> np.ndarray:
    parts = np.ascontiguousarray(parts, dtype=np.int64)
    width = _diagonal_width(parts)
    out = np.zeros((parts.shape[0], width + 1), dtype=np.int64)
    if parts.shape[1]:
        _diagonal_fill_nb(parts, out)
    return out[:, :width]


# -- brute-force arrangement counting -------------------------------------
#
# Walks every distinct ordering of a multiset with next-permutation and
# checks the rise condition at the leaf.  No pruning: this is the referee
# for the closed-form counts, so it must not share their reasoning.


def _count_bounded_rises(values, max_rise):
    n = values.shape[0]
    a = values.copy()
    count = 0
    while True:
        ok = True
        for i in range(n - 1):
            if a[i + 1] - a[i] > max_rise:
                ok = False
                break
        if ok:
            count += 1
        # next lexicographic permutation (duplicates give distinct orderings once)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return count
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        tmp = a[i]
        a[i] = a[j]
        a[j] = tmp
        lo = i + 1
        hi = n - 1
        while lo < hi:
            tmp = a[lo]
            a[lo] = a[hi]
            a[hi] = tmp
            lo += 1
            hi -= 1


_count_bounded_rises_nb = njit(_count_bounded_rises)


def _multiset_values(mults) -> np.ndarray:
    mults = [int(b) for b in mults]
    if any(b < 0 for b in mults):
        raise ValueError("multiplicities must be non-negative")
    return np.repeat(np.arange(len(mults), dtype=np.int64), mults)


def count_bounded_rises_np(mults, max_rise: int) -> int:
    """Orderings of ``{0^(b0), 1^(b1), ...}`` whose every rise is ``<= max_rise``."""
    values = _multiset_values(mults)
    if values.size == 0:
        return 1
    return int(_count_bounded_rises(values, int(max_rise)))


def count_bounded_rises_nb(mults, max_rise: int) -> int:
    values = _multiset_values(mults)
    if values.size == 0:
        return 1
    return int(_count_bounded_rises_nb(values, int(max_rise)))


if USE_NUMBA:
    partitions_array = partitions_array_nb
    diagonal_batch = diagonal_batch_nb
    count_bounded_rises = count_bounded_rises_nb
else:
    partitions_array = partitions_array_np
    diagonal_batch = diagonal_batch_np
    count_bounded_rises = count_bounded_rises_np

BACKEND = "numba" if USE_NUMBA else "numpy"

__all__ = [
    "BACKEND",
    "NUMBA_AVAILABLE",
    "count_bounded_rises",
    "count_bounded_rises_nb",
    "count_bounded_rises_np",
    "diagonal_batch",
    "diagonal_batch_nb",
    "diagonal_batch_np",
    "distinct_partition_numbers",
    "partition_numbers",
    "partitions_array",
    "partitions_array_nb",
    "partitions_array_np",
]
