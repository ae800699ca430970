import pytest

import dyckflaws as df


def test_stats_and_parse():
    assert df.stats("uddu") == {
        "n": 2, "m": 1, "peaks": 1, "valleys": 1,
        "double_ascents": 0, "double_descents": 1,
    }
    assert df.normalize("dUuD") == "DUUD"
    assert df.height_profile("DUUD") == [0, -1, 0, 1, 0]
    assert df.is_catalan("")
    with pytest.raises(ValueError):
        df.stats("UUD")


def test_table_row():
    assert df.table_polynomial_str(5, 2) == "4x^4+18x^3+17x^2+3x"
    assert df.table_polynomial(2, 2) == [1, 1]
    assert df.count_table(3, "double_ascent")[2] == {0: 1, 1: 3, 2: 1}
    assert df.enumerate_paths(2, 1) == ["DUUD", "UDDU"]


def test_closed_forms_are_python_ints():
    assert df.catalan(40) == 2622127042276492108820
    assert df.peak_pair_sum(6, 2) == 64
    assert df.central_peak(3) == 60
    assert df.recurrence_peak_poly(6, 4) == [0, 5, 35, 60, 29, 3]
    with pytest.raises(ValueError):
        df.peak_pair_sum(6, 4)


def test_bijections():
    assert df.cf_step("UUDD") == "DUUD"
    assert df.cf_step_inverse("DUUD") == "UUDD"
    assert df.cf_decompose("UDUD") == "UD|·|U|·|D|·"
    assert df.complement("UD") == "DU"
    with pytest.raises(ValueError):
        df.cf_step_inverse("UDUD")


def test_series_and_verify():
    p = {(n, x, y): c for n, x, y, c in df.series("P", 4)}
    assert p[(4, 3, 2)] == 3
    report = {r["identity"]: r for r in df.identity_report(4)}
    assert sorted(report) == list("abcdefgh")
    assert all(r["status"] == "pass" for k, r in report.items() if k != "e")
    # alpha keeps a -x^-1 term at z^1; the R relation itself holds
    assert report["e"]["first_failure"] == {
        "n": 1, "xexp": -1, "yexp": 0, "expected": "0", "got": "-1",
    }
    suites = df.verify("all", 5, 4)
    assert [s["suite"] for s in suites] == ["oracle", "formulas", "bijections", "series"]
    assert all(s["status"] == "pass" for s in suites[:3])
