import pytest
from hypothesis import given, settings, strategies as st

import oracles
from wordperm import Word, build_word
from wordperm.errors import CapExceededError, DegenerateWordError, WordSpecError
from wordperm.specs import Doubled, Morphic, Named, SturmianCF, complement, double, shift
from wordperm.words import (check_balanced, class_table, class_words, factor_set,
                            recurrence_window, run_parameters, smallest_period,
                            sturmian_run_parameter)


def test_named_prefixes():
    assert Word("thue-morse").text(8) == "01101001"
    assert Word("thue-morse").text(16) == "0110100110010110"
    assert Word("fibonacci").text(12) == "010010100100"
    assert Word("double(thue-morse)").text(8) == "00111100"
    assert Word("fibonacci").text(1) == "0"
    assert len(Word("fibonacci").prefix(0)) == 0


@pytest.mark.parametrize("name", ["fibonacci", "thue-morse", "period-doubling"])
def test_prefix_matches_string_oracle(name, texts):
    assert Word(name).text(5000) == texts[name][:5000]


def test_sturmian_directive_matches_standard_words():
    fib = SturmianCF((1,), head=(2,))
    assert Word(fib).text(3000) == Word("fibonacci").text(3000)
    w = Word("sturmian:cf=[2,1,1,1]")
    ref = oracles.standard_sturmian_text(lambda i: (2, 1, 1, 1)[(i - 1) % 4], 3000)
    assert w.text(3000) == ref


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_sturmian_words_are_balanced_with_n_plus_1_factors(period):
    w = Word(SturmianCF(tuple(period)))
    assert check_balanced(w, 12, 4000)
    for n in (1, 5, 9):
        assert factor_set(w, n, 4000).count == n + 1


def test_derived_words():
    t = Word("thue-morse")
    assert t.derived("complement").text(4) == "1001"
    assert Word(double(Morphic("01", "0"))).text(6) == "001100"
    assert Word(shift(Named("fibonacci"), 2)).text(6) == "001010"
    assert Word(complement(Named("thue-morse"))).text(16) == oracles.complemented(t.text(16))
    assert t.derived("double") is t.derived("double")
    assert isinstance(t.derived("double").spec, Doubled)


def test_factor_and_bounds():
    fib = Word("fibonacci")
    assert fib.factor(3, 5) == "010"
    assert Word("thue-morse").factor(0, 3) == "0110"
    assert fib.factor(7, 7) == fib.text(8)[7]
    with pytest.raises(IndexError):
        fib.factor(5, 3)


def test_hard_cap_and_read_only_prefix():
    w = build_word("thue-morse", hard_cap=1000)
    with pytest.raises(CapExceededError):
        w.prefix(1001)
    arr = w.prefix(100)
    with pytest.raises(ValueError):
        arr[0] = 1


def test_invalid_specs():
    with pytest.raises(WordSpecError):
        Morphic("10", "01")  # not prolongable on 0
    with pytest.raises(WordSpecError):
        SturmianCF(())
    with pytest.raises(WordSpecError):
        SturmianCF((0, 1))


def test_factor_sets(texts):
    fs = factor_set(Word("fibonacci"), 2, 10 ** 4)
    assert fs.factors == {"00", "01", "10"} and fs.count == 3
    assert factor_set(Word("thue-morse"), 5, 10 ** 4).count == 12
    for name in ("fibonacci", "thue-morse", "period-doubling"):
        for n in (1, 4, 11):
            got = factor_set(Word(name), n, 3000).count
            assert got == oracles.factor_count(texts[name], n, range(3000))
        assert factor_set(Word(name), 1, 100).factors <= {"0", "1"}


def test_run_parameters():
    def pair(spec):
        r = run_parameters(Word(spec), 10 ** 4)
        return r.k0, r.k1

    assert pair("thue-morse") == (2, 2)
    assert pair("fibonacci") == (2, 1)
    assert pair("double(fibonacci)") == (4, 2)
    assert pair("period-doubling") == (3, 1)
    assert sturmian_run_parameter(Word("fibonacci")) == 2
    with pytest.raises(DegenerateWordError):
        sturmian_run_parameter(Word("thue-morse"))


def test_class_tables():
    t = class_table(Word("thue-morse"), 10 ** 4)
    assert t.classes == ["00", "01", "10", "11"]
    assert t.class_of[0] == 1
    assert class_table(Word("fibonacci"), 10 ** 4).classes == ["00", "01", "10"]
    assert class_words(3, 1) == ["000", "001", "01", "10"]


@pytest.mark.parametrize("name", ["fibonacci", "thue-morse", "period-doubling"])
def test_class_of_each_position_is_a_prefix(name, texts):
    table = class_table(Word(name), 2000)
    text = texts[name]
    for i in range(2000):
        hits = [j for j, c in enumerate(table.classes) if text.startswith(c, i)]
        assert hits == [table.class_of[i]]


def test_recurrence_windows():
    assert recurrence_window(Word("thue-morse"), 2, 10 ** 4) == 9
    assert recurrence_window(Word("fibonacci"), 2, 10 ** 4) == 6
    n1 = recurrence_window(Word("period-doubling"), 1, 10 ** 4)
    assert n1 >= 2


def test_recurrence_window_against_brute_force(texts):
    text = texts["thue-morse"]
    N = recurrence_window(Word("thue-morse"), 2, 4000)
    factors = {text[i:i + 2] for i in range(4000)}
    for a in range(0, 1500):
        window = text[a:a + N]
        assert all(f in window for f in factors)
    assert any(not all(f in text[a:a + N - 1] for f in factors) for a in range(1500))


def test_balance():
    assert check_balanced(Word("fibonacci"), 16)
    assert not check_balanced(Word("double(fibonacci)"), 16)
    assert not check_balanced(Word("thue-morse"), 16)


def test_aperiodic_prefixes_have_no_small_period():
    for name in ("fibonacci", "thue-morse", "period-doubling", "double(thue-morse)"):
        assert smallest_period(Word(name), 4096) is None
    assert smallest_period(Word("morphic:0->01,1->01"), 256) == 2
