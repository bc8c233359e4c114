"""Batch enumeration of distinct subpermutations over a horizon of start positions.

Two windows give the same length-(n+1) subpermutation iff they give the same
length-n one and the new last entry falls at the same place among the first
n. That turns enumeration into one refinement pass per length: the class id
at length n+1 is a dense rank of (class id at n, count of smaller keys), with
the counts coming from :func:`wordperm.kernels.refine_counts`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .perms import SubPermutation, shift_keys
from .words import DEFAULT_HORIZON, Word


@dataclass
class LengthClasses:
    """Distinct length-n subpermutations, each represented by its first start."""

    n: int
    reps: np.ndarray
    even_reps: np.ndarray
    odd_reps: np.ndarray


class PermEnumerator:
    def __init__(self, word: Word, horizon: int = DEFAULT_HORIZON, n_max: int = 32):
        self.word = word
        self.horizon = int(horizon)
        self.n_max = int(n_max)
        self.keys = shift_keys(word, self.horizon + self.n_max - 1, self.n_max)
        self._levels: dict[int, LengthClasses] = {}
        self._run()

    def _level(self, n, ids, first):
        even_first = np.unique(ids[0::2], return_index=True)[1] * 2
        odd_first = np.unique(ids[1::2], return_index=True)[1] * 2 + 1
        return LengthClasses(n, np.sort(first), np.sort(even_first), np.sort(odd_first))

    def _run(self):
        H = self.horizon
        ids = np.zeros(H, dtype=np.int64)
        self._levels[1] = self._level(1, ids, np.array([0]))
        for n in range(1, self.n_max):
            cnt = kernels.refine_counts(self.keys, n, H)
            key = ids * (n + 1) + cnt
            _, first, inv = np.unique(key, return_index=True, return_inverse=True)
            ids = inv.ravel().astype(np.int64)
            self._levels[n + 1] = self._level(n + 1, ids, first)

    def classes(self, n: int) -> LengthClasses:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"length {n} outside enumerated range 1..{self.n_max}")
        return self._levels[n]

    def perms(self, n: int, starts=None) -> dict[SubPermutation, int]:
        """Map each distinct subpermutation (of the given starts) to its first start."""
        if starts is None:
            starts = self.classes(n).reps
        rows = kernels.window_ranks_batch(self.keys, starts, n)
        name = self.word.name
        return {SubPermutation(tuple(r), (name, int(s))): int(s)
                for r, s in zip(rows.tolist(), starts)}


def enumerator(word: Word, n_max: int, horizon: int = DEFAULT_HORIZON) -> PermEnumerator:
    """Shared enumerator cached on the word handle, grown when a longer length is needed."""
    cache_key = ("enumerator", int(horizon))
    enum = word._derived.get(cache_key)
    if enum is None or enum.n_max < n_max:
        size = n_max if enum is None else max(n_max, 2 * enum.n_max)
        enum = PermEnumerator(word, horizon, size)
        word._derived[cache_key] = enum
    return enum
