"""Shift comparison, subpermutation extraction, restrictions and pair structure.

Ranks are 1-based, positions 0-based: ``extract_subperm(w, a, n)`` is the
rank vector of the shifts w[a], ..., w[a+n-1] under lexicographic order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cmp_to_key

import numpy as np

from . import kernels
from .errors import UnresolvedComparisonError
from .words import Word

ABSOLUTE_CAP = 2 ** 20


@dataclass(frozen=True)
class SubPermutation:
    """A rank vector in one-line notation, optionally tagged with where it came from."""

    ranks: tuple[int, ...]
    source: tuple[str, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        if sorted(ranks) != list(range(1, len(ranks) + 1)):
            raise ValueError(f"{ranks} is not a permutation of 1..{len(ranks)}")

    def __len__(self):
        return len(self.ranks)

    def __getitem__(self, i):
        return self.ranks[i]

    def __iter__(self):
        return iter(self.ranks)

    def __str__(self):
        return "(" + " ".join(map(str, self.ranks)) + ")"


def perm(*ranks) -> SubPermutation:
    """Shorthand: ``perm(2, 3, 1)`` or ``perm([2, 3, 1])``."""
    if len(ranks) == 1 and not isinstance(ranks[0], int):
        ranks = tuple(ranks[0])
    return SubPermutation(ranks)


def parse_perm(text: str) -> SubPermutation:
    """Inverse of ``str``: ``"(4 9 7 2)"``."""
    m = re.fullmatch(r"\s*\(\s*([0-9\s]*?)\s*\)\s*", text)
    if not m:
        raise ValueError(f"not a permutation literal: {text!r}")
    return SubPermutation(tuple(int(x) for x in m.group(1).split()))


@dataclass(frozen=True)
class ComparisonOutcome:
    relation: str  # "less", "greater" or "unresolved"
    discrepancy: int | None
    cap_used: int


def compare_shifts(word: Word, a: int, b: int, cap: int) -> ComparisonOutcome:
    """Compare w[a] with w[b] on at most ``cap`` letters."""
    if a == b:
        raise ValueError("compare_shifts needs two distinct positions")
    arr = word.prefix(max(a, b) + cap)
    c = kernels.first_mismatch(arr, a, b, cap)
    if c < 0:
        return ComparisonOutcome("unresolved", None, cap)
    return ComparisonOutcome("less" if arr[a + c] < arr[b + c] else "greater", c, cap)


def shift_order(word: Word, a: int, b: int, cap: int = 64,
                absolute_cap: int = ABSOLUTE_CAP) -> ComparisonOutcome:
    """``compare_shifts`` with the cap escalated x4 until resolved."""
    while True:
        out = compare_shifts(word, a, b, cap)
        if out.relation != "unresolved":
            return out
        if cap >= absolute_cap:
            raise UnresolvedComparisonError(a, b, cap)
        cap = min(cap * 4, absolute_cap)


def extract_subperm(word: Word, a: int, n: int,
                    absolute_cap: int = ABSOLUTE_CAP) -> SubPermutation:
    """The subpermutation pi_w[a, a+n-1]."""
    if n < 1:
        raise ValueError("subpermutation length must be >= 1")
    cap = max(4 * n, 16)
    while True:
        arr = word.prefix(a + n - 1 + cap)
        ranks, ok = kernels.window_ranks(arr, a, n, cap)
        if ok:
            return SubPermutation(tuple(ranks.tolist()), (word.name, a))
        if cap >= absolute_cap:
            break
        cap = min(cap * 4, absolute_cap)
    # name the first unresolved pair for the error message
    for i in range(n):
        for j in range(i + 1, n):
            if compare_shifts(word, a + i, a + j, cap).relation == "unresolved":
                raise UnresolvedComparisonError(a + i, a + j, cap)
    raise UnresolvedComparisonError(a, a + n - 1, cap)


def extract_by_comparison(word: Word, a: int, n: int) -> SubPermutation:
    """Slow reference extraction: sort positions with pairwise ``shift_order``."""
    def cmp(i, j):
        if i == j:
            return 0
        return -1 if shift_order(word, i, j).relation == "less" else 1

    order = sorted(range(a, a + n), key=cmp_to_key(cmp))
    ranks = [0] * n
    for r, pos in enumerate(order, 1):
        ranks[pos - a] = r
    return SubPermutation(tuple(ranks), (word.name, a))


def shift_keys(word: Word, count: int, span: int,
               absolute_cap: int = ABSOLUTE_CAP) -> np.ndarray:
    """Integer keys for the shifts at positions 0..count-1.

    ``keys[i] < keys[j]`` iff w[i] < w[j] holds for every pair with
    ``|i - j| < span``; farther pairs may tie. Keys are dense ranks of
    length-2^t factors, doubling t until nearby shifts are separated.
    """
    depth = max(4 * span, 16)
    while True:
        arr = word.prefix(count + depth)
        rank = arr.astype(np.int64)
        length = 1
        while True:
            head = rank[:count]
            if all(not np.any(head[:count - d] == head[d:]) for d in range(1, min(span, count))):
                return head.copy()
            if 2 * length > depth:
                break
            m = len(rank) - length
            key = rank[:m] * (int(rank.max()) + 1) + rank[length:length + m]
            _, inv = np.unique(key, return_inverse=True)
            rank = inv.ravel().astype(np.int64)
            length *= 2
        if depth >= absolute_cap:
            head = rank[:count]
            for d in range(1, min(span, count)):
                hit = np.flatnonzero(head[:count - d] == head[d:])
                if hit.size:
                    raise UnresolvedComparisonError(int(hit[0]), int(hit[0]) + d, depth)
        depth = min(depth * 4, absolute_cap)


def ranks_from_keys(keys: np.ndarray, a: int, n: int, source=None) -> SubPermutation:
    row = keys[a:a + n]
    ranks = np.empty(n, dtype=np.int64)
    ranks[np.argsort(row, kind="stable")] = np.arange(1, n + 1)
    return SubPermutation(tuple(ranks.tolist()), source)


# -- forms and restrictions -------------------------------------------------


def form_of(p: SubPermutation) -> str:
    """Ascent/descent word: letter i is 0 iff p_i < p_{i+1}."""
    if len(p) < 2:
        raise ValueError("form needs length >= 2")
    r = p.ranks
    return "".join("0" if r[i] < r[i + 1] else "1" for i in range(len(r) - 1))


# For binary words the form of pi_w[a, a+n-1] is the factor w[a, a+n-2].
factor_from_perm = form_of


def _shifted_source(p, offset):
    return None if p.source is None else (p.source[0], p.source[1] + offset)


def restrict_left(p: SubPermutation) -> SubPermutation:
    """Drop the last entry: L(p)_i = p_i - 1 if p_last < p_i else p_i."""
    if len(p) < 2:
        raise ValueError("left restriction needs length >= 2")
    last = p.ranks[-1]
    return SubPermutation(tuple(x - 1 if last < x else x for x in p.ranks[:-1]), p.source)


def restrict_right(p: SubPermutation) -> SubPermutation:
    """Drop the first entry: R(p)_i = p_{i+1} - 1 if p_0 < p_{i+1} else p_{i+1}."""
    if len(p) < 2:
        raise ValueError("right restriction needs length >= 2")
    first = p.ranks[0]
    return SubPermutation(tuple(x - 1 if first < x else x for x in p.ranks[1:]),
                          _shifted_source(p, 1))


def restrict_middle(p: SubPermutation) -> SubPermutation:
    if len(p) < 3:
        raise ValueError("middle restriction needs length >= 3")
    return restrict_right(restrict_left(p))


def iterate_left(p: SubPermutation, k: int) -> SubPermutation:
    """k-fold left restriction L^k(p)."""
    if k < 0 or len(p) <= k:
        raise ValueError(f"cannot left-restrict a length-{len(p)} permutation {k} times")
    for _ in range(k):
        p = restrict_left(p)
    return p


def complement_perm(p: SubPermutation) -> SubPermutation:
    """p~_i = n - p_i + 1 (the subpermutation of the complemented word)."""
    n = len(p)
    return SubPermutation(tuple(n - x + 1 for x in p.ranks), p.source)


# -- type-k structure -------------------------------------------------------


@dataclass(frozen=True)
class TypeKDecomposition:
    k: int
    epsilon: int
    alpha: tuple[int, ...]
    middle: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def empty_middle(self) -> bool:
        return not self.middle


def decompose_type(p: SubPermutation, k: int) -> TypeKDecomposition | None:
    """Split p = (alpha middle beta) with alpha_i = beta_i + eps, |alpha| = |beta| = k.

    An empty middle (length exactly 2k) is accepted and flagged.
    """
    n = len(p)
    if k < 1 or n < 2 * k:
        return None
    alpha, beta = p.ranks[:k], p.ranks[n - k:]
    eps = alpha[0] - beta[0]
    if eps not in (-1, 1) or any(x - y != eps for x, y in zip(alpha, beta)):
        return None
    return TypeKDecomposition(k, eps, alpha, p.ranks[k:n - k], beta)


def is_complementary_pair(p: SubPermutation, q: SubPermutation, k: int) -> bool:
    """p = (alpha mid beta) and q = (beta mid alpha) with p of type k."""
    n = len(p)
    if len(q) != n or k < 1 or n < 2 * k:
        return False
    if decompose_type(p, k) is None:
        return False
    P, Q = p.ranks, q.ranks
    return Q[:k] == P[n - k:] and Q[n - k:] == P[:k] and Q[k:n - k] == P[k:n - k]


def complementary_pair_type(p: SubPermutation, q: SubPermutation) -> int | None:
    """Largest k for which p and q form a complementary pair, or None."""
    if len(p) != len(q):
        raise ValueError("complementary pairs need equal lengths")
    if p == q:
        return None
    for k in range(len(p) // 2, 0, -1):
        if is_complementary_pair(p, q, k):
            return k
    return None
