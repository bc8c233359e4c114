"""Lazily materialized infinite binary words and their factor statistics."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from . import specs
from .errors import CapExceededError, DegenerateWordError, WordSpecError
from .specs import Complemented, Doubled, Morphic, Named, Shifted, SturmianCF, WordSpec

DEFAULT_HORIZON = 2 ** 17
DEFAULT_HARD_CAP = 2 ** 24


def _apply_morphism(word: np.ndarray, img0: np.ndarray, img1: np.ndarray) -> np.ndarray:
    lens = np.where(word == 0, len(img0), len(img1))
    starts = np.concatenate(([0], np.cumsum(lens)[:-1]))
    out = np.empty(int(lens.sum()), dtype=np.uint8)
    for letter, img in ((0, img0), (1, img1)):
        pos = starts[word == letter]
        for k, x in enumerate(img):
            out[pos + k] = x
    return out


def _letters(text: str) -> np.ndarray:
    return np.frombuffer(text.encode(), dtype=np.uint8) - ord("0")


def _morphic_prefix(spec: Morphic, m: int) -> np.ndarray:
    img0, img1 = _letters(spec.image0), _letters(spec.image1)
    word = np.zeros(1, dtype=np.uint8)
    while len(word) < m:
        nxt = _apply_morphism(word, img0, img1)
        if len(nxt) == len(word):
            raise WordSpecError(f"morphism {specs.render(spec)} has no growing fixed point")
        word = nxt
    return word


def _sturmian_prefix(spec: SturmianCF, m: int) -> np.ndarray:
    # standard words: s_{-1} = 1, s_0 = 0, s_1 = s_0^(a_1 - 1) s_{-1}, s_n = s_{n-1}^(a_n) s_{n-2}
    older = np.array([1], dtype=np.uint8)
    old = np.array([0], dtype=np.uint8)
    cur = np.concatenate([old] * (spec.directive(1) - 1) + [older])
    i = 1
    while len(cur) < m:
        i += 1
        old, cur = cur, np.concatenate([cur] * spec.directive(i) + [old])
    return cur


def materialize(spec: WordSpec, m: int) -> np.ndarray:
    """At least ``m`` letters of the word described by ``spec``, as uint8 0/1."""
    m = max(int(m), 1)
    spec = specs.resolve(spec)
    if isinstance(spec, Morphic):
        return _morphic_prefix(spec, m)
    if isinstance(spec, SturmianCF):
        return _sturmian_prefix(spec, m)
    if isinstance(spec, Doubled):
        return np.repeat(materialize(spec.inner, (m + 1) // 2), 2)
    if isinstance(spec, Complemented):
        return 1 - materialize(spec.inner, m)
    if isinstance(spec, Shifted):
        return materialize(spec.inner, m + spec.offset)[spec.offset:]
    raise TypeError(f"not a word spec: {spec!r}")


class Word:
    """Handle on an infinite binary word with a lazily grown prefix.

    Reads of an already materialized length are lock-free; extension takes a
    lock. Growth is geometric, so ``prefix`` is amortized linear.
    """

    def __init__(self, spec: WordSpec, hard_cap: int = DEFAULT_HARD_CAP):
        if isinstance(spec, str):
            from .parsing import parse_spec
            spec = parse_spec(spec)
        self.spec = spec
        self.hard_cap = int(hard_cap)
        self._prefix = np.zeros(0, dtype=np.uint8)
        self._lock = threading.Lock()
        self._derived: dict = {}

    def __repr__(self):
        return f"Word({specs.render(self.spec)!r}, materialized={len(self._prefix)})"

    @property
    def name(self) -> str:
        return specs.render(self.spec)

    @property
    def materialized(self) -> int:
        return len(self._prefix)

    def prefix(self, m: int) -> np.ndarray:
        """First ``m`` letters as a read-only uint8 array."""
        if m < 0:
            raise ValueError("prefix length must be nonnegative")
        if m > self.hard_cap:
            raise CapExceededError(f"{self.name}: requested {m} letters, hard cap is {self.hard_cap}")
        if m > len(self._prefix):
            with self._lock:
                if m > len(self._prefix):
                    target = min(max(m, 2 * len(self._prefix), 64), self.hard_cap)
                    grown = np.ascontiguousarray(materialize(self.spec, target)[:target])
                    grown.setflags(write=False)
                    self._prefix = grown
        return self._prefix[:m]

    def text(self, m: int) -> str:
        return (self.prefix(m) + ord("0")).tobytes().decode()

    def letter(self, i: int) -> int:
        return int(self.prefix(i + 1)[i])

    def factor(self, i: int, j: int) -> str:
        """Letters w_i .. w_j inclusive."""
        if i < 0 or j < i:
            raise IndexError(f"bad factor bounds [{i}, {j}]")
        return (self.prefix(j + 1)[i:] + ord("0")).tobytes().decode()

    def derived(self, kind: str) -> "Word":
        """Cached handle on the doubled / complemented word."""
        if kind not in self._derived:
            wrap = {"double": Doubled, "complement": Complemented}[kind]
            self._derived[kind] = Word(wrap(self.spec), hard_cap=self.hard_cap)
        return self._derived[kind]


def build_word(spec: WordSpec | str, hard_cap: int = DEFAULT_HARD_CAP) -> Word:
    return Word(spec, hard_cap=hard_cap)


def as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)


def prefix(word: Word, m: int) -> np.ndarray:
    return word.prefix(m)


def factor(word: Word, i: int, j: int) -> str:
    return word.factor(i, j)


# -- factor statistics -----------------------------------------------------


@dataclass
class FactorSet:
    n: int
    factors: frozenset
    horizon: int
    last_new: int

    @property
    def count(self) -> int:
        return len(self.factors)

    @property
    def converged(self) -> bool:
        return self.last_new < self.horizon // 2


def _factor_ids(arr: np.ndarray, n: int, count: int):
    """Dense ids of the length-n factors at positions 0..count-1."""
    rows = sliding_window_view(arr[:count + n - 1], n)
    packed = np.ascontiguousarray(np.packbits(rows, axis=1))
    keys = packed.view(np.dtype((np.void, packed.shape[1]))).ravel()
    _, first, ids = np.unique(keys, return_index=True, return_inverse=True)
    return ids.ravel(), first


def factor_set(word: Word, n: int, horizon: int = DEFAULT_HORIZON) -> FactorSet:
    """Distinct length-n factors starting at positions 0..horizon-1."""
    if n < 1:
        raise ValueError("factor length must be >= 1")
    arr = word.prefix(horizon + n - 1)
    _, first = _factor_ids(arr, n, horizon)
    facts = frozenset(word.factor(int(i), int(i) + n - 1) for i in first)
    return FactorSet(n, facts, horizon, int(first.max()))


def rho_counts(word: Word, n_max: int, horizon: int = DEFAULT_HORIZON) -> dict[int, FactorSet]:
    return {n: factor_set(word, n, horizon) for n in range(1, n_max + 1)}


@dataclass
class RunParameters:
    k0: int
    k1: int
    horizon: int
    last_new: int  # start of the run that first reached a maximum

    @property
    def k(self) -> int:
        return max(self.k0, self.k1)

    @property
    def converged(self) -> bool:
        return self.last_new < self.horizon // 2


def _runs(arr: np.ndarray):
    """(letters, lengths, starts) of the maximal runs, dropping a trailing run
    that may continue past the end of ``arr``."""
    breaks = np.flatnonzero(arr[1:] != arr[:-1]) + 1
    starts = np.concatenate(([0], breaks))
    ends = np.concatenate((breaks, [len(arr)]))
    lengths = ends - starts
    return arr[starts][:-1], lengths[:-1], starts[:-1]


def run_parameters(word: Word, horizon: int = DEFAULT_HORIZON) -> RunParameters:
    """Longest runs of 0 and of 1 seen in the first ``horizon`` letters."""
    arr = word.prefix(horizon)
    letters, lengths, starts = _runs(arr)
    found = []
    for x in (0, 1):
        mine = lengths[letters == x]
        if mine.size == 0:
            raise DegenerateWordError(
                f"{word.name}: letter {x} has no complete run in the first {horizon} letters")
        kx = int(mine.max())
        found.append((kx, int(starts[letters == x][np.argmax(mine)])))
    return RunParameters(found[0][0], found[1][0], horizon, max(found[0][1], found[1][1]))


def class_words(k0: int, k1: int) -> list[str]:
    """C_0 < C_1 < ... : 0^k0, 0^(k0-1)1, ..., 01, 10, 110, ..., 1^k1.

    An isolated letter's single class is written with its successor (01 or 10).
    """
    zeros = ["0" * k0 if k0 > 1 else "01"] + ["0" * r + "1" for r in range(k0 - 1, 0, -1)]
    ones = ["1" * r + "0" for r in range(1, k1)] + ["1" * k1 if k1 > 1 else "10"]
    return zeros + ones


def classify(arr: np.ndarray, k0: int, k1: int, count: int) -> np.ndarray:
    """Class index of each of the first ``count`` positions of ``arr``.

    ``arr`` must extend at least max(k0, k1) letters past ``count``.
    """
    k = max(k0, k1)
    if len(arr) < count + k:
        raise ValueError("not enough letters to classify the requested positions")
    seg = arr[:count + k]
    brk = np.flatnonzero(seg[1:] != seg[:-1])
    pos = np.arange(count)
    nxt = np.searchsorted(brk, pos)
    # run length from each position; len(seg) - pos when the run is not closed
    run = np.where(nxt < len(brk), brk[np.minimum(nxt, len(brk) - 1)] - pos + 1, len(seg) - pos)
    letter = seg[:count]
    cap = np.where(letter == 0, k0, k1)
    if np.any(run > cap):
        i = int(np.flatnonzero(run > cap)[0])
        raise DegenerateWordError(
            f"run of {letter[i]} longer than the scanned maximum at position {i}; "
            "scan a longer horizon")
    return np.where(letter == 0, k0 - run, k0 + run - 1).astype(np.int64)


@dataclass
class ClassTable:
    k0: int
    k1: int
    classes: list[str]
    class_of: np.ndarray = field(repr=False)
    horizon: int = 0
    converged: bool = True

    @property
    def k(self) -> int:
        return max(self.k0, self.k1)

    @property
    def n_classes(self) -> int:
        return self.k0 + self.k1

    def classes_at(self, word: Word, a: int, n: int) -> np.ndarray:
        """Class indices of positions a..a+n-1."""
        if a + n <= len(self.class_of):
            return self.class_of[a:a + n]
        arr = word.prefix(a + n + self.k)
        return classify(arr[a:], self.k0, self.k1, n)


def class_table(word: Word, horizon: int = DEFAULT_HORIZON) -> ClassTable:
    runs = run_parameters(word, horizon)
    arr = word.prefix(horizon + runs.k)
    return ClassTable(runs.k0, runs.k1, class_words(runs.k0, runs.k1),
                      classify(arr, runs.k0, runs.k1, horizon), horizon, runs.converged)


def recurrence_window(word: Word, n: int, horizon: int = DEFAULT_HORIZON) -> int:
    """Smallest N such that every scanned length-N window holds every length-n factor.

    Starts are scanned only while every factor still has a later occurrence
    inside the horizon.
    """
    arr = word.prefix(horizon + n - 1)
    ids, _ = _factor_ids(arr, n, horizon)
    order = np.argsort(ids, kind="stable")
    bounds = np.searchsorted(ids[order], np.arange(ids.max() + 2))
    groups = [order[bounds[x]:bounds[x + 1]] for x in range(ids.max() + 1)]
    last_start = min(int(g[-1]) for g in groups)
    starts = np.arange(last_start + 1)
    reach = np.zeros(len(starts), dtype=np.int64)
    for g in groups:
        reach = np.maximum(reach, g[np.searchsorted(g, starts)])
    return int((reach - starts).max()) + n


def check_balanced(word: Word, n_max: int, horizon: int = DEFAULT_HORIZON) -> bool:
    """True iff scanned factors of each length <= n_max have 1-counts within 1."""
    arr = word.prefix(horizon + n_max).astype(np.int64)
    cs = np.concatenate(([0], np.cumsum(arr)))
    for n in range(1, n_max + 1):
        ones = cs[n:n + horizon] - cs[:horizon]
        if ones.max() - ones.min() > 1:
            return False
    return True


def smallest_period(word: Word, m: int, max_period: int = 64) -> int | None:
    """Smallest p <= max_period with w_i = w_{i+p} throughout prefix(m), else None."""
    arr = word.prefix(m)
    for p in range(1, max_period + 1):
        if np.array_equal(arr[p:], arr[:-p]):
            return p
    return None


def sturmian_run_parameter(word: Word, horizon: int = DEFAULT_HORIZON) -> int:
    """The k with every isolated letter followed by k or k-1 copies of the other.

    One of the two letters must be isolated (run length 1); raises otherwise.
    """
    runs = run_parameters(word, horizon)
    if min(runs.k0, runs.k1) != 1:
        raise DegenerateWordError(
            f"{word.name}: neither letter is isolated (k0={runs.k0}, k1={runs.k1})")
    return runs.k
