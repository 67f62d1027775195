"""numba switch.

Set ``DIAGSEQ_DISABLE_NUMBA=1`` (or numba's own ``NUMBA_DISABLE_JIT=1``)
to run every kernel through its pure numpy/Python path.
"""

from __future__ import annotations

import os

_TRUTHY = {"1", "true", "yes", "on"}

try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False

USE_NUMBA = (
    NUMBA_AVAILABLE
    and os.environ.get("DIAGSEQ_DISABLE_NUMBA", "").lower() not in _TRUTHY
    and os.environ.get("NUMBA_DISABLE_JIT", "").lower() not in _TRUTHY
)


def njit(func):
    """Compile ``func`` with numba when available, else return it unchanged."""
    if not NUMBA_AVAILABLE:
        return func
    return numba.njit(cache=True, nogil=True)(func)


__all__ = ["NUMBA_AVAILABLE", "USE_NUMBA", "njit"]
