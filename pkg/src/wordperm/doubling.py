"""The letter-doubling map on subpermutations.

For a window of length n at position a, ``delta`` sends pi_w[a, a+n+k-1]
(k = longest run) to pi_{d(w)}[2a, 2a+2n-1] using only the left-restricted
ranks and the per-class occurrence counts of the window.

Two different "k"s are in play: ``ClassTable.k`` is the longest run (the
input-length excess) and ``ClassTable.n_classes`` = k0 + k1 is the number of
classes. They are never interchangeable.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .enumeration import enumerator
from .errors import CensusViolation, CrossCheckError, DeltaDomainError, DisjointnessError
from .perms import (SubPermutation, extract_subperm, iterate_left, restrict_left,
                    restrict_middle, restrict_right)
from .words import DEFAULT_HORIZON, ClassTable, Word, class_table, recurrence_window


def table_for(word: Word, horizon: int = DEFAULT_HORIZON) -> ClassTable:
    key = ("class_table", int(horizon))
    if key not in word._derived:
        word._derived[key] = class_table(word, horizon)
    return word._derived[key]


def threshold_for(word: Word, horizon: int = DEFAULT_HORIZON) -> int:
    """Scanned N_k: every window this long contains every factor of length k."""
    key = ("threshold", int(horizon))
    if key not in word._derived:
        word._derived[key] = recurrence_window(word, table_for(word, horizon).k, horizon)
    return word._derived[key]


@dataclass(frozen=True)
class GammaProfile:
    start: int
    length: int
    gamma: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.gamma)

    @property
    def complete(self) -> bool:
        return all(self.sizes)

    def S(self, j: int) -> int:
        """Prefix sum |gamma_0| + ... + |gamma_j|, with S(-1) = 0."""
        return sum(self.sizes[:j + 1])

    @property
    def sums(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.cumsum(self.sizes))


def profile_from_classes(start: int, classes, n_classes: int) -> GammaProfile:
    members = [[] for _ in range(n_classes)]
    for i, j in enumerate(classes):
        members[int(j)].append(i)
    return GammaProfile(start, len(classes), tuple(tuple(m) for m in members))


def gamma_profile(word: Word, a: int, n: int, table: ClassTable | None = None) -> GammaProfile:
    table = table or table_for(word)
    return profile_from_classes(a, table.classes_at(word, a, n), table.n_classes)


@dataclass(frozen=True)
class DoubledOrder:
    case: str
    a: int  # after swapping so that w[a] < w[b]
    b: int
    order: tuple[int, int, int, int]  # positions of d(w), increasing shift order


def order_doubled_shifts(word: Word, a: int, b: int,
                         table: ClassTable | None = None) -> DoubledOrder:
    """Which of the five orderings of d(w)[2a], d(w)[2a+1], d(w)[2b], d(w)[2b+1] holds."""
    from .perms import shift_order
    table = table or table_for(word)
    if shift_order(word, a, b).relation == "greater":
        a, b = b, a
    i = int(table.classes_at(word, a, 1)[0])
    j = int(table.classes_at(word, b, 1)[0])
    x, y = word.letter(a), word.letter(b)
    A, A1, B, B1 = 2 * a, 2 * a + 1, 2 * b, 2 * b + 1
    if x == 0 and y == 1:
        return DoubledOrder("c", a, b, (A, A1, B1, B))
    if x == 0:
        if i < j:
            return DoubledOrder("a", a, b, (A, A1, B, B1))
        return DoubledOrder("b", a, b, (A, B, A1, B1))
    if i < j:
        return DoubledOrder("d", a, b, (A1, A, B1, B))
    return DoubledOrder("e", a, b, (A1, B1, A, B))


def delta_image(p: SubPermutation, classes, n_classes: int, k: int) -> SubPermutation:
    """Image of p (length n+k) given the classes of its first n positions."""
    n = len(p) - k
    if n < 1 or len(classes) < n:
        raise ValueError(f"need a length n+k permutation and n classes (k={k})")
    classes = [int(c) for c in classes[:n]]
    sizes = [0] * n_classes
    for j in classes:
        sizes[j] += 1
    if not all(sizes):
        missing = [j for j, s in enumerate(sizes) if not s]
        raise DeltaDomainError(f"window misses classes {missing}; it is shorter than the "
                               "recurrence threshold")
    S = [0] * (n_classes + 1)  # S[j + 1] = S_j, S[0] = S_{-1}
    for j, s in enumerate(sizes):
        S[j + 1] = S[j] + s
    lk = iterate_left(p, k).ranks
    r = p.ranks
    out = [0] * (2 * n)
    for i in range(n):
        j = classes[i]
        lo, hi = lk[i] + S[j], lk[i] + S[j + 1]
        if r[i] < r[i + 1]:
            out[2 * i], out[2 * i + 1] = lo, hi
        else:
            out[2 * i], out[2 * i + 1] = hi, lo
    src = None if p.source is None else (f"double({p.source[0]})", 2 * p.source[1])
    return SubPermutation(tuple(out), src)


@dataclass(frozen=True)
class DeltaResult:
    input: SubPermutation
    image: SubPermutation
    profile: GammaProfile
    window: str
    classes: tuple[int, ...]
    cross_checked: bool

    def to_record(self) -> dict:
        return {
            "input": str(self.input),
            "window": self.window,
            "classes": list(self.classes),
            "S": list(self.profile.sums),
            "image": str(self.image),
            "cross_check": self.cross_checked,
        }


def delta(word: Word, a: int, n: int, cross_check: bool = True,
          table: ClassTable | None = None) -> DeltaResult:
    """delta(pi_w[a, a+n+k-1]), cross-checked against pi_{d(w)}[2a, 2a+2n-1]."""
    table = table or table_for(word)
    k = table.k
    p = extract_subperm(word, a, n + k)
    classes = table.classes_at(word, a, n)
    image = delta_image(p, classes, table.n_classes, k)
    if cross_check:
        direct = extract_subperm(word.derived("double"), 2 * a, 2 * n)
        if direct != image:
            raise CrossCheckError(f"delta({word.name}, a={a}, n={n}) = {image} "
                                  f"but direct extraction gives {direct}")
    return DeltaResult(p, image, profile_from_classes(a, classes, table.n_classes),
                       word.factor(a, a + n - 1), tuple(int(c) for c in classes), cross_check)


_RESTRICT = {"L": (restrict_left, 0, -1), "R": (restrict_right, 1, -1),
             "M": (restrict_middle, 1, -2)}


def _delta_restricted(which, word, a, n, cross_check, table):
    fn, offset, shrink = _RESTRICT[which]
    image = fn(delta(word, a, n, cross_check=False, table=table).image)
    if cross_check:
        direct = extract_subperm(word.derived("double"), 2 * a + offset, 2 * n + shrink)
        if direct != image:
            raise CrossCheckError(f"delta_{which}({word.name}, a={a}, n={n}) = {image} "
                                  f"but direct extraction gives {direct}")
    return image


def delta_L(word: Word, a: int, n: int, cross_check: bool = True, table=None) -> SubPermutation:
    return _delta_restricted("L", word, a, n, cross_check, table)


def delta_R(word: Word, a: int, n: int, cross_check: bool = True, table=None) -> SubPermutation:
    return _delta_restricted("R", word, a, n, cross_check, table)


def delta_M(word: Word, a: int, n: int, cross_check: bool = True, table=None) -> SubPermutation:
    return _delta_restricted("M", word, a, n, cross_check, table)


def restrict(p: SubPermutation, which: str | None) -> SubPermutation:
    return p if which is None else _RESTRICT[which][0](p)


# -- set-level views --------------------------------------------------------


def partition_even_odd(word: Word, m: int, horizon: int = DEFAULT_HORIZON,
                       threshold: int | None = None):
    """Split Perm^{w}(m) by start parity. ``word`` is the doubled word.

    When ``m >= 2 * threshold`` the two sets must be disjoint; a shared
    permutation raises :class:`DisjointnessError`.
    """
    enum = enumerator(word, m, horizon)
    lc = enum.classes(m)
    even = set(enum.perms(m, lc.even_reps))
    odd = set(enum.perms(m, lc.odd_reps))
    if threshold is not None and m >= 2 * threshold and even & odd:
        shared = sorted(even & odd, key=lambda p: p.ranks)[0]
        raise DisjointnessError(f"{word.name}: {shared} starts at both parities (m={m})")
    return even, odd


def delta_images(word: Word, n: int, horizon: int = DEFAULT_HORIZON,
                 table: ClassTable | None = None,
                 domain_only: bool = False) -> dict[SubPermutation, SubPermutation]:
    """delta of every distinct p in Perm^w(n+k), keyed by p (carrying its first start).

    With ``domain_only`` the p whose window misses a class are skipped instead
    of raising; below the recurrence threshold that is the domain of delta.
    """
    table = table or table_for(word, horizon)
    k = table.k
    enum = enumerator(word, n + k, horizon)
    out = {}
    for p, a in enum.perms(n + k).items():
        try:
            out[p] = delta_image(p, table.classes_at(word, a, n), table.n_classes, k)
        except DeltaDomainError:
            if not domain_only:
                raise
    return out


@dataclass(frozen=True)
class Collision:
    p: SubPermutation
    q: SubPermutation
    image: SubPermutation


def collision_census(word: Word, n: int, horizon: int = DEFAULT_HORIZON,
                     restriction: str | None = None,
                     table: ClassTable | None = None) -> list[Collision]:
    """All pairs p != q in Perm^w(n+k) whose (restricted) delta images coincide.

    Below the recurrence threshold only windows holding every class take part.
    For the unrestricted map every collision must have equal L^k restrictions
    and equal per-position classes; anything else raises CensusViolation.
    """
    table = table or table_for(word, horizon)
    k = table.k
    images = delta_images(word, n, horizon, table,
                          domain_only=n < threshold_for(word, horizon))
    groups = defaultdict(list)
    for p, img in images.items():
        groups[restrict(img, restriction)].append(p)
    out = []
    for img, members in sorted(groups.items(), key=lambda kv: kv[0].ranks):
        members.sort(key=lambda p: p.ranks)
        for p, q in combinations(members, 2):
            if restriction is None:
                cp = table.classes_at(word, p.source[1], n)
                cq = table.classes_at(word, q.source[1], n)
                if iterate_left(p, k) != iterate_left(q, k) or not np.array_equal(cp, cq):
                    raise CensusViolation(f"{p} and {q} collide under delta without equal "
                                          "L^k restrictions and classes")
            out.append(Collision(p, q, img))
    return out
