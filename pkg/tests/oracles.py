"""Slow, independent reference implementations used as test oracles.

Everything here works on plain Python strings so it shares no code with the
numpy/numba engines.
"""

from itertools import islice


def morphic_text(img0: str, img1: str, m: int) -> str:
    w = "0"
    while len(w) < m:
        w = "".join(img0 if c == "0" else img1 for c in w)
    return w[:m]


def standard_sturmian_text(directive, m: int) -> str:
    """Limit of s_n = s_{n-1}^{a_n} s_{n-2}, s_{-1} = 1, s_0 = 0."""
    prev, cur = "1", "0"
    i = 1
    while len(cur) < m or i <= 2:
        a = directive(i)
        if i == 1:
            prev, cur = cur, "0" * (a - 1) + "1"
        else:
            prev, cur = cur, cur * a + prev
        i += 1
    return cur[:m]


def doubled(text: str) -> str:
    return "".join(c + c for c in text)


def complemented(text: str) -> str:
    return text.translate(str.maketrans("01", "10"))


def subperm(text: str, a: int, n: int) -> tuple[int, ...]:
    """Rank vector of the suffixes text[a:], ..., text[a+n-1:].

    Correct as long as every pair of these suffixes differs before the end
    of ``text``; callers pass texts much longer than the window.
    """
    order = sorted(range(a, a + n), key=lambda i: text[i:])
    ranks = [0] * n
    for r, pos in enumerate(order, 1):
        ranks[pos - a] = r
    return tuple(ranks)


def perm_set(text: str, n: int, starts) -> set[tuple[int, ...]]:
    return {subperm(text, a, n) for a in starts}


def factor_count(text: str, n: int, starts) -> int:
    return len({text[a:a + n] for a in starts})


def left(p):
    last = p[-1]
    return tuple(x - 1 if x > last else x for x in p[:-1])


def right(p):
    first = p[0]
    return tuple(x - 1 if x > first else x for x in p[1:])


def first_n(iterable, n):
    return list(islice(iterable, n))
