"""Pure-numpy versions of the hot kernels.

Each function here has a twin with the same signature in ``kernels_numba``.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def first_mismatch(arr, a, b, cap):
    """Smallest c < cap with arr[a+c] != arr[b+c], or -1."""
    diff = np.flatnonzero(arr[a:a + cap] != arr[b:b + cap])
    return int(diff[0]) if diff.size else -1


def window_ranks(arr, a, n, cap):
    """1-based ranks of the shifts starting at a..a+n-1, compared on cap letters.

    Returns ``(ranks, ok)``; ``ok`` is False when two shifts in the window agree
    on all ``cap`` letters, in which case ``ranks`` is meaningless.
    """
    rows = sliding_window_view(arr[a:a + n - 1 + cap], cap)[:n]
    order = np.lexsort(rows.T[::-1])
    srt = rows[order]
    if n > 1 and np.any(np.all(srt[1:] == srt[:-1], axis=1)):
        return np.zeros(n, dtype=np.int64), False
    ranks = np.empty(n, dtype=np.int64)
    ranks[order] = np.arange(1, n + 1)
    return ranks, True


def refine_counts(keys, n, count):
    """cnt[a] = #{0 <= j < n : keys[a+j] < keys[a+n]} for a in range(count)."""
    last = keys[n:n + count]
    cnt = np.zeros(count, dtype=np.int32)
    for j in range(n):
        cnt += keys[j:j + count] < last
    return cnt


def window_ranks_batch(keys, starts, n):
    """Rank vectors of keys[s:s+n] for each start, shape (len(starts), n)."""
    idx = np.asarray(starts, dtype=np.int64)[:, None] + np.arange(n)
    rows = keys[idx]
    return np.argsort(np.argsort(rows, axis=1, kind="stable"), axis=1) + 1
