"""numba-compiled versions of the hot kernels (see ``kernels_numpy``)."""

import numpy as np
from numba import njit


@njit(cache=True)
def first_mismatch(arr, a, b, cap):
    for c in range(cap):
        if arr[a + c] != arr[b + c]:
            return c
    return -1


@njit(cache=True)
def window_ranks(arr, a, n, cap):
    # binary insertion sort of window offsets by shift order
    order = np.empty(n, np.int64)
    ranks = np.zeros(n, np.int64)
    for i in range(n):
        lo = 0
        hi = i
        while lo < hi:
            mid = (lo + hi) // 2
            y = order[mid]
            c = first_mismatch(arr, a + y, a + i, cap)
            if c < 0:
                return ranks, False
            if arr[a + y + c] < arr[a + i + c]:
                lo = mid + 1
            else:
                hi = mid
        for t in range(i, lo, -1):
            order[t] = order[t - 1]
        order[lo] = i
    for r in range(n):
        ranks[order[r]] = r + 1
    return ranks, True


@njit(cache=True)
def refine_counts(keys, n, count):
    cnt = np.zeros(count, np.int32)
    for a in range(count):
        last = keys[a + n]
        c = 0
        for j in range(n):
            if keys[a + j] < last:
                c += 1
        cnt[a] = c
    return cnt


@njit(cache=True)
def window_ranks_batch(keys, starts, n):
    out = np.empty((starts.shape[0], n), np.int64)
    for r in range(starts.shape[0]):
        s = starts[r]
        for i in range(n):
            c = 1
            ki = keys[s + i]
            for j in range(n):
                if keys[s + j] < ki:
                    c += 1
            out[r, i] = c
    return out
