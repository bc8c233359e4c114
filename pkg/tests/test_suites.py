import pytest

from wordperm.suites import SUITES, verify_suite


@pytest.mark.parametrize("name, word, ns", [
    ("sturmian-tau", "fibonacci", range(2, 25)),
    ("sturmian-tau", "sturmian:cf=[2,1,1,1]", range(2, 25)),
    ("tm-tau", "thue-morse", range(6, 20)),
    ("tm-rho", "thue-morse", range(3, 30)),
    ("doubled-tm", "thue-morse", range(9, 13)),
    ("doubled-sturmian", "fibonacci", range(12, 20)),
    ("complement", "period-doubling", range(1, 16)),
    ("bounds", "period-doubling", range(1, 20)),
    ("delta-oracle", "fibonacci", range(6, 12)),
    ("restrictions", "period-doubling", range(2, 20)),
    ("type1-exclusion", "thue-morse", range(9, 18)),
    ("restriction-equivalence", "fibonacci", range(6, 14)),
    ("tm-pairs", "thue-morse", range(6, 20)),
    ("tm-injectivity", "thue-morse", range(9, 18)),
])
def test_suites_pass(name, word, ns):
    report = verify_suite(name, word, ns, 2 ** 15)
    assert report.status == "pass", [(r.n, r.status, r.detail) for r in report.rows]


def test_wrong_formula_fails_with_rows():
    report = verify_suite("tm-tau", "fibonacci", range(6, 9), 2 ** 14)
    assert report.status == "fail"
    assert [r.status for r in report.rows] == ["fail"] * 3


def test_small_horizon_is_inconclusive():
    report = verify_suite("tm-tau", "thue-morse", range(30, 32), 64)
    assert report.status == "inconclusive"


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify_suite("riemann", "fibonacci", range(2, 3))


def test_doubled_sturmian_probes_below_threshold():
    report = verify_suite("doubled-sturmian", "fibonacci", range(2, 16), 2 ** 15)
    probes = [r for r in report.rows if r.status == "probe"]
    assert [r.n for r in probes] == list(range(2, 12))
    assert report.status == "pass"
    assert any("holds from n=6" in note for note in report.notes)


def test_doubled_tm_reports_the_alternative_value():
    report = verify_suite("doubled-tm", "thue-morse", [9, 16], 2 ** 15)
    row9 = report.rows[0]
    assert row9.observed == (68, 70) and "rejected" in row9.detail
    assert report.rows[1].observed == (96, 100)


def test_all_suites_registered():
    assert len(SUITES) == 13
