from functools import cmp_to_key
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from wordperm import Word
from wordperm.doubling import (collision_census, delta, delta_image, delta_images, delta_L,
                               delta_M, delta_R, gamma_profile, order_doubled_shifts,
                               partition_even_odd, table_for, threshold_for)
from wordperm.errors import DeltaDomainError, DisjointnessError
from wordperm.enumeration import enumerator
from wordperm.perms import extract_subperm, iterate_left, perm, restrict_left, shift_order

NAMES = ["fibonacci", "thue-morse", "period-doubling"]
IMAGE = perm(5, 8, 14, 13, 12, 10, 3, 6, 11, 9, 1, 2, 4, 7)


def test_worked_example():
    T = Word("thue-morse")
    p, q = delta(T, 0, 7), delta(T, 12, 7)
    assert str(p.input) == "(4 9 7 2 6 1 3 8 5)"
    assert str(q.input) == "(5 9 7 2 6 1 3 8 4)"
    assert p.image == q.image == IMAGE
    assert p.cross_checked
    assert delta_M(T, 0, 7) == delta_M(T, 12, 7)
    assert p.profile.sums[-1] == 7


def test_thresholds():
    assert threshold_for(Word("thue-morse")) == 9
    assert threshold_for(Word("fibonacci")) == 6
    assert threshold_for(Word("period-doubling")) == 16


def test_gamma_profiles():
    T = Word("thue-morse")
    g = gamma_profile(T, 0, 9)
    assert g.S(3) == 9 and g.S(-1) == 0 and g.complete
    assert sum(g.sizes) == 9
    f = gamma_profile(Word("fibonacci"), 0, 1)
    assert f.gamma == ((), (0,), ())
    assert not f.complete


def test_missing_class_is_a_domain_error():
    T = Word("thue-morse")
    with pytest.raises(DeltaDomainError):
        delta(T, 0, 3)


@given(st.sampled_from(NAMES), st.integers(0, 20000), st.integers(0, 30))
@settings(max_examples=120, deadline=None)
def test_delta_matches_direct_extraction(name, a, extra):
    w = Word(name)
    n = threshold_for(w) + extra
    res = delta(w, a, n, cross_check=False)
    assert res.image == extract_subperm(w.derived("double"), 2 * a, 2 * n)
    assert delta_L(w, a, n) == restrict_left(res.image)
    assert delta_R(w, a, n).source[1] == 2 * a + 1
    delta_M(w, a, n)  # cross-checked internally


@pytest.mark.parametrize("name", NAMES)
def test_delta_against_string_oracle(name, texts):
    w = Word(name)
    dtext = oracles.doubled(texts[name])
    n = threshold_for(w) + 3
    for a in range(0, 600, 11):
        assert delta(w, a, n, cross_check=False).image.ranks == oracles.subperm(dtext, 2 * a, 2 * n)


@given(st.sampled_from(NAMES), st.integers(0, 5000), st.integers(1, 60))
@settings(max_examples=150, deadline=None)
def test_doubled_order_cases_match_direct_comparisons(name, a, gap):
    w = Word(name)
    b = a + gap
    res = order_doubled_shifts(w, a, b)
    d = w.derived("double")
    four = [2 * res.a, 2 * res.a + 1, 2 * res.b, 2 * res.b + 1]
    cmp = lambda i, j: -1 if shift_order(d, i, j).relation == "less" else 1
    assert tuple(sorted(four, key=cmp_to_key(cmp))) == res.order
    x, y = w.letter(res.a), w.letter(res.b)
    if x == 0 and y == 1:
        assert res.case == "c"
    elif x == y == 0:
        assert res.case in "ab"
    else:
        assert res.case in "de"


def test_order_case_c_layout():
    T = Word("thue-morse")
    res = order_doubled_shifts(T, 0, 1)  # T = 01..., w_0 = 0, w_1 = 1
    assert res.case == "c" and res.order == (0, 1, 3, 2)


@pytest.mark.parametrize("name", NAMES)
def test_even_and_odd_starts_are_disjoint(name):
    w = Word(name)
    N = threshold_for(w)
    d = w.derived("double")
    for m in (2 * N, 2 * N + 1, 2 * N + 6):
        even, odd = partition_even_odd(d, m, 2 ** 15, threshold=N)
        assert not even & odd


def test_disjointness_violation_is_reported():
    # a too-small threshold makes short lengths qualify, where parities do overlap
    d = Word("double(thue-morse)")
    with pytest.raises(DisjointnessError):
        partition_even_odd(d, 2, 2 ** 12, threshold=1)


@pytest.mark.parametrize("name", NAMES)
def test_delta_is_onto_the_even_starts(name):
    w = Word(name)
    n = threshold_for(w) + 2
    images = set(delta_images(w, n, 2 ** 14).values())
    even, _ = partition_even_odd(w.derived("double"), 2 * n, 2 ** 15)
    assert images == even


def test_sturmian_census_is_empty():
    fib = Word("fibonacci")
    for n in range(6, 20):
        assert collision_census(fib, n, 2 ** 15) == []


def test_thue_morse_census_regimes():
    T = Word("thue-morse")
    sizes = {n: len(collision_census(T, n, 2 ** 15)) for n in range(4, 20)}
    assert {n for n, s in sizes.items() if s} == {4, 7, 8, 15, 16}
    assert sizes[10] == 0
    m_sizes = {n: len(collision_census(T, n, 2 ** 15, "M")) for n in range(4, 20)}
    assert {n for n, s in m_sizes.items() if s} == {4, 5, 7, 8, 9, 15, 16, 17}


def test_collisions_share_restriction_and_classes():
    T = Word("thue-morse")
    table = table_for(T)
    for c in collision_census(T, 16, 2 ** 15):
        assert iterate_left(c.p, table.k) == iterate_left(c.q, table.k)
        assert c.p.source[1] != c.q.source[1]


def test_equal_restriction_with_adjacent_last_class_separates():
    """Same L^k restriction but different last class: classes are adjacent and images differ."""
    checked = 0
    for name in NAMES:
        w = Word(name)
        table = table_for(w)
        k = table.k
        n = threshold_for(w) + 1
        found = enumerator(w, n + k, 2 ** 14).perms(n + k)
        by_rest = {}
        for p, a in found.items():
            by_rest.setdefault(iterate_left(p, k), []).append((p, a))
        for group in by_rest.values():
            for (p, a), (q, b) in combinations(group, 2):
                cp, cq = table.classes_at(w, a, n), table.classes_at(w, b, n)
                if list(cp[:-1]) != list(cq[:-1]) or cp[-1] == cq[-1]:
                    continue
                assert abs(int(cp[-1]) - int(cq[-1])) == 1
                x = delta_image(p, cp, table.n_classes, k)
                y = delta_image(q, cq, table.n_classes, k)
                assert x[2 * n - 2] != y[2 * n - 2] and x[2 * n - 1] != y[2 * n - 1]
                checked += 1
    assert checked > 0


def test_equal_images_imply_equal_doubled_factors():
    T = Word("thue-morse")
    for n in (15, 16):
        for c in collision_census(T, n, 2 ** 15, "M"):
            a, b = c.p.source[1], c.q.source[1]
            assert T.factor(a, a + n - 1) == T.factor(b, b + n - 1)
