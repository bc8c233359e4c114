"""Kernel dispatch.

The backend is fixed at import time by the ``WORDPERM_KERNELS`` environment
variable: ``numba`` (default when numba imports) or ``numpy``. Both backends
return identical results; the flag only trades JIT warm-up for throughput.
"""

import os

import numpy as np

from . import kernels_numpy

_requested = os.environ.get("WORDPERM_KERNELS", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"WORDPERM_KERNELS must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from . import kernels_numba as _impl
    except ImportError:  # numba missing: fall back silently
        _impl = kernels_numpy
else:
    _impl = kernels_numpy

BACKEND = "numba" if _impl is not kernels_numpy else "numpy"


def first_mismatch(arr, a, b, cap):
    return int(_impl.first_mismatch(arr, a, b, cap))


def window_ranks(arr, a, n, cap):
    ranks, ok = _impl.window_ranks(arr, a, n, cap)
    return ranks, bool(ok)


def refine_counts(keys, n, count):
    return _impl.refine_counts(keys, n, count)


def window_ranks_batch(keys, starts, n):
    return _impl.window_ranks_batch(keys, np.asarray(starts, dtype=np.int64), n)
