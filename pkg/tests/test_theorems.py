from fractions import Fraction

import pytest

from clausen_sums.clausen import closed_3f2, series_3f2
from clausen_sums.expr import ast_parse, ast_render
from clausen_sums.hp import PrecisionContext
from clausen_sums.theorems import (
    Thresholds,
    get_record,
    load_database,
    parse_fixture_line,
    read_fixture_lines,
    render_fixture,
    summarize,
    verify_all,
    verify_one,
)

EXPECTED_C = {
    "4.1": "-1/2", "4.2": "7/2", "4.3": "-4/3", "4.4": "4/3", "4.5": "10/3",
    "4.6": "6/5", "4.7": "7/5", "4.8": "8/5", "4.9": "9/5", "4.10": "1/6",
    "4.11": "7/6", "4.12": "11/6", "4.13": "11/10", "4.14": "13/10", "4.15": "17/10",
    "4.16": "19/10", "4.17": "13/12", "4.18": "17/12", "4.19": "19/12", "4.20": "23/12",
    "5.1": "13/8", "5.2": "15/8", "5.3": "5/3", "5.4": "13/8", "5.5": "15/8", "5.6": "5/3",
}


@pytest.fixture(scope="module")
def db():
    return load_database()


def test_database_shape(db):
    assert len(db) == 26
    assert [r.id for r in db] == list(EXPECTED_C)
    assert {r.id: str(r.c) for r in db} == EXPECTED_C
    counts = {s: sum(r.status == s for r in db) for s in ("new", "corrected", "erroneous")}
    assert counts == {"new": 20, "corrected": 3, "erroneous": 3}
    assert [r.id for r in db if r.status == "erroneous"] == ["5.1", "5.2", "5.3"]


def test_record_examples():
    r = get_record("4.1")
    assert r.c == Fraction(-1, 2) and r.rhs == ast_parse("2/3 - (2/3)*ln(2)")
    r = get_record("5.3")
    assert r.status == "erroneous"
    assert r.rhs == ast_parse("(5*sqrt(3)/12)*(3*sqrt(3)*(1 - ln(3)) - pi)")
    assert r.text == "5 * sqrt(3) / 12 * (3 * sqrt(3) * (1 - ln(3)) - pi)"
    r = get_record("5.6")
    assert r.status == "corrected"
    assert r.text == "5 * sqrt(3) / 12 * (3 * sqrt(3) * (1 - ln(3)) + pi)"


def test_unknown_record():
    with pytest.raises(KeyError):
        get_record("9.9")


def test_database_roundtrip(db):
    for r in db:
        assert ast_render(ast_parse(r.text)) == r.text
        assert ast_parse(ast_render(r.rhs)) == r.rhs


def test_fixture_file_matches_embedded_copy(db):
    lines = read_fixture_lines()
    assert lines == [r.to_line() for r in db]
    for line, r in zip(lines, db):
        rid, c, status, rhs = parse_fixture_line(line)
        assert (rid, c, status, rhs) == (r.id, r.c, r.status, r.rhs)
    assert render_fixture().splitlines()[1:] == lines


def test_erroneous_printed_forms_differ_only_where_flagged(db):
    # 5.1/5.4 and 5.3/5.6 differ by one sign, 5.2/5.5 by the pi coefficient
    pairs = {"5.1": "5.4", "5.2": "5.5", "5.3": "5.6"}
    for bad, good in pairs.items():
        a, b = get_record(bad).text, get_record(good).text
        diffs = [(x, y) for x, y in zip(a, b) if x != y]
        if bad == "5.2":
            assert a.replace("+ 7 *", "+ 14 *") == b
        else:
            assert diffs == [("-", "+")]


def test_verify_4_13_at_50_digits():
    rep = verify_one("4.13", PrecisionContext(50))
    assert rep.verdict == "pass"
    assert rep.diff_closed.value < PrecisionContext(50).tolerance(40)


@pytest.mark.parametrize("rid, gap", [("5.1", "3.38"), ("5.2", "4.06"), ("5.3", "4.53")])
def test_erroneous_gaps(rid, gap):
    rep = verify_one(rid, PrecisionContext(30))
    assert rep.verdict == "expected-fail"
    assert rep.diff_closed.to_decimal(3) == gap


def test_engine_self_consistency(db):
    ctx = PrecisionContext(30)
    for r in db:
        s = series_3f2(r.c, ctx)
        assert abs((closed_3f2(r.c).evaluate(ctx) - s.value).value) <= s.eps + ctx.tolerance(40)


@pytest.mark.parametrize("digits", [15, 30, 60])
def test_verify_all_verdicts(digits):
    reports = verify_all(PrecisionContext(digits))
    assert summarize(reports) == {"pass": 23, "fail": 0, "expected_fail": 3}
    assert all(r.ok for r in reports)
    assert [r.id for r in reports] == list(EXPECTED_C)


def test_verdicts_stable_across_precision():
    lo = {r.id: r.verdict for r in verify_all(PrecisionContext(30))}
    hi = {r.id: r.verdict for r in verify_all(PrecisionContext(60))}
    assert lo == hi


def test_gaps_exceed_fail_floor_at_any_precision():
    for digits in (15, 25, 40):
        for rid in ("5.1", "5.2", "5.3"):
            assert verify_one(rid, PrecisionContext(digits)).diff_closed.value > 0.05


def test_default_thresholds():
    ctx = PrecisionContext(30)
    p, s, f = Thresholds().resolve(ctx)
    assert p == ctx.tolerance(20) and s == p and f == ctx.mpf(Fraction(1, 20))


def test_impossible_threshold_fails_records():
    rep = verify_one("4.4", PrecisionContext(30), Thresholds(pass_threshold=0, series_threshold=0))
    assert rep.verdict == "fail"
    assert not rep.ok


def test_gauss_route_verifies_too():
    reports = verify_all(PrecisionContext(30), route="gauss")
    assert all(r.ok for r in reports)
