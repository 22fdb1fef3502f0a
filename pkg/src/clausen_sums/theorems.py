"""Database of unit-argument Clausen identities and their verification.

Each record states F(c) = 3F2[1, 1, c; 2, c+1; 1] = <rhs>, with the right
side transcribed verbatim (no simplification).  Records marked
``erroneous`` are published forms that are known to be wrong; they are
kept so the verifier can show they fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from clausen_sums.clausen import closed_3f2, series_3f2
from clausen_sums.digamma import DEFAULT_ROUTE
from clausen_sums.errors import AccuracyError, DomainError
from clausen_sums.expr import Expr, ast_eval, ast_parse, ast_render
from clausen_sums.hp import HPReal, PrecisionContext
from clausen_sums.rational import format_rational, parse_rational

STATUSES = ("new", "corrected", "erroneous")
FAIL_FLOOR = Fraction(1, 20)

# id | c | status | rhs | note
_RECORDS = [
    ("4.1", "-1/2", "new", "2/3 - 2/3 * ln(2)", "new theorems, first entry"),
    ("4.2", "7/2", "new", "7/5 * (46/15 - 2 * ln(2))", "new theorems"),
    ("4.3", "-4/3", "new", "4/7 * (15/4 + pi * sqrt(3) / 6 - 3/2 * ln(3))", "new theorems; lower parameter -1/3"),
    ("4.4", "4/3", "new", "12 - 2 * pi / sqrt(3) - 6 * ln(3)", "new theorems"),
    ("4.5", "10/3", "new", "10/7 * (117/28 - sqrt(3) * pi / 6 - 3/2 * ln(3))", "new theorems"),
    ("4.6", "6/5", "new",
     "6 * (5 - ln(10) - (1 + sqrt(5)) / sqrt(10 - 2 * sqrt(5)) * pi / 2"
     " + 1/2 * (sqrt(5) * ln((sqrt(5) - 1) / 2) - ln(sqrt(5) / 4)))",
     "new theorems; ln(sqrt5/4) read as log of the quotient"),
    ("4.7", "7/5", "new",
     "7/2 * (5/2 - ln(10) - (sqrt(5) - 1) / sqrt(10 + 2 * sqrt(5)) * pi / 2"
     " + 1/2 * (sqrt(5) * ln((sqrt(5) + 1) / 2) - ln(sqrt(5) / 4)))",
     "new theorems; ln(sqrt5/4) read as log of the quotient"),
    ("4.8", "8/5", "new",
     "8/3 * (5/3 - ln(10) + (sqrt(5) - 1) / sqrt(10 + 2 * sqrt(5)) * pi / 2"
     " + 1/2 * (sqrt(5) * ln((sqrt(5) + 1) / 2) - ln(sqrt(5) / 4)))",
     "new theorems; ln(sqrt5/4) read as log of the quotient"),
    ("4.9", "9/5", "new",
     "9/4 * (5/4 - ln(10) + (sqrt(5) + 1) / sqrt(10 - 2 * sqrt(5)) * pi / 2"
     " + 1/2 * (sqrt(5) * ln((sqrt(5) - 1) / 2) - ln(sqrt(5) / 4)))",
     "new theorems; ln(sqrt5/4) read as log of the quotient"),
    ("4.10", "1/6", "new", "sqrt(3) * pi / 10 + 3/10 * ln(3) + 2/5 * ln(2)", "new theorems"),
    ("4.11", "7/6", "new", "7 * (6 - ln(12) - sqrt(3) * pi / 2 - ln(sqrt(3)))", "new theorems"),
    ("4.12", "11/6", "new", "11/5 * (6/5 - ln(12) + sqrt(3) * pi / 2 - ln(sqrt(3)))", "new theorems"),
    ("4.13", "11/10", "new",
     "11 * (10 - ln(20) - sqrt(10 + 2 * sqrt(5)) / (sqrt(5) - 1) * pi / 2"
     " + 1/2 * (sqrt(5) * ln(sqrt(5) - 2) - ln(sqrt(5))))",
     "new theorems; also proved independently via psi(1/10)"),
    ("4.14", "13/10", "new",
     "13/3 * (10/3 - ln(20) - sqrt(10 - 2 * sqrt(5)) / (sqrt(5) + 1) * pi / 2"
     " + 1/2 * (sqrt(5) * ln(sqrt(5) + 2) - ln(sqrt(5))))",
     "new theorems"),
    ("4.15", "17/10", "new",
     "17/7 * (10/7 - ln(20) + sqrt(10 - 2 * sqrt(5)) / (sqrt(5) + 1) * pi / 2"
     " + 1/2 * (sqrt(5) * ln(sqrt(5) + 2) - ln(sqrt(5))))",
     "new theorems"),
    ("4.16", "19/10", "new",
     "19/9 * (10/9 - ln(20) + sqrt(10 + 2 * sqrt(5)) / (sqrt(5) - 1) * pi / 2"
     " + 1/2 * (sqrt(5) * ln(sqrt(5) - 2) - ln(sqrt(5))))",
     "new theorems"),
    ("4.17", "13/12", "new",
     "13 * (12 - ln(24) - (2 + sqrt(3)) * pi / 2 + sqrt(3) * ln(2 - sqrt(3)) - ln(sqrt(3)))",
     "new theorems"),
    ("4.18", "17/12", "new",
     "17/5 * (12/5 - ln(24) - (2 - sqrt(3)) * pi / 2 + sqrt(3) * ln(2 + sqrt(3)) - ln(sqrt(3)))",
     "new theorems"),
    ("4.19", "19/12", "new",
     "19/7 * (12/7 - ln(24) + (2 - sqrt(3)) * pi / 2 + sqrt(3) * ln(2 + sqrt(3)) - ln(sqrt(3)))",
     "new theorems"),
    ("4.20", "23/12", "new",
     "23/11 * (12/11 - ln(24) + (2 + sqrt(3)) * pi / 2 + sqrt(3) * ln(2 - sqrt(3)) - ln(sqrt(3)))",
     "new theorems, last entry"),
    ("5.1", "13/8", "erroneous",
     "13/50 * (16 - 5 * (sqrt(2) - 1) * pi - 40 * ln(2) + 10 * sqrt(2) * ln(1 + sqrt(2)))",
     "published table entry, wrong sign on the pi term"),
    ("5.2", "15/8", "erroneous",
     "15/196 * (32 + 7 * (1 + sqrt(2)) * pi - 112 * ln(2) - 28 * sqrt(2) * ln(1 + sqrt(2)))",
     "published table entry, pi coefficient 7 instead of 14"),
    ("5.3", "5/3", "erroneous",
     "5 * sqrt(3) / 12 * (3 * sqrt(3) * (1 - ln(3)) - pi)",
     "published table entry, wrong sign on the pi term"),
    ("5.4", "13/8", "corrected",
     "13/50 * (16 + 5 * (sqrt(2) - 1) * pi - 40 * ln(2) + 10 * sqrt(2) * ln(1 + sqrt(2)))",
     "correction of 5.1"),
    ("5.5", "15/8", "corrected",
     "15/196 * (32 + 14 * (1 + sqrt(2)) * pi - 112 * ln(2) - 28 * sqrt(2) * ln(1 + sqrt(2)))",
     "correction of 5.2"),
    ("5.6", "5/3", "corrected",
     "5 * sqrt(3) / 12 * (3 * sqrt(3) * (1 - ln(3)) + pi)",
     "correction of 5.3"),
]

EXPECTED_ERRONEOUS = ("5.1", "5.2", "5.3")


@dataclass(frozen=True)
class TheoremRecord:
    id: str
    c: Fraction
    rhs: Expr
    status: str
    source_note: str = ""
    text: str = ""

    @property
    def expected_verdict(self) -> str:
        return "expected-fail" if self.status == "erroneous" else "pass"

    def to_line(self) -> str:
        return f"{self.id} | {format_rational(self.c)} | {self.status} | {ast_render(self.rhs)}"


def id_key(record_id: str) -> tuple:
    return tuple(int(part) for part in record_id.split("."))


def _build(rows) -> list[TheoremRecord]:
    records = []
    seen = set()
    for rid, c, status, text, note in rows:
        if rid in seen:
            raise ValueError(f"duplicate theorem id {rid}")
        seen.add(rid)
        if status not in STATUSES:
            raise ValueError(f"{rid}: unknown status {status!r}")
        rhs = ast_parse(text)
        if ast_render(rhs) != text:
            raise ValueError(f"{rid}: stored text is not in canonical form:\n  {text}\n  {ast_render(rhs)}")
        c = parse_rational(c)
        if c.denominator == 1 and c <= 0:
            raise ValueError(f"{rid}: invalid parameter c = {c}")
        records.append(TheoremRecord(rid, c, rhs, status, note, text))
    bad = sorted(r.id for r in records if r.status == "erroneous")
    if tuple(bad) != EXPECTED_ERRONEOUS:
        raise ValueError(f"erroneous records must be exactly {EXPECTED_ERRONEOUS}, got {bad}")
    return sorted(records, key=lambda r: id_key(r.id))


_DATABASE: list[TheoremRecord] | None = None


def load_database() -> list[TheoremRecord]:
    global _DATABASE
    if _DATABASE is None:
        _DATABASE = _build(_RECORDS)
    return list(_DATABASE)


def get_record(record_id: str) -> TheoremRecord:
    for r in load_database():
        if r.id == record_id:
            return r
    raise KeyError(record_id)


def read_fixture_lines() -> list[str]:
    """Lines of the shipped fixture file (comments and blanks dropped)."""
    text = resources.files("clausen_sums").joinpath("data/theorems.txt").read_text(encoding="utf-8")
    return [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_fixture_line(line: str) -> tuple[str, Fraction, str, Expr]:
    parts = [p.strip() for p in line.split("|")]
    if len(parts) != 4:
        raise ValueError(f"expected 'id | c | status | expression', got {line!r}")
    rid, c, status, text = parts
    return rid, parse_rational(c), status, ast_parse(text)


def render_fixture() -> str:
    header = "# id | c | status | expression   (F(c) = 3F2[1, 1, c; 2, c+1; 1])\n"
    return header + "".join(r.to_line() + "\n" for r in load_database())


# --------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class Thresholds:
    """``None`` means the default 10**(-digits+10)."""

    pass_threshold: object = None
    series_threshold: object = None
    fail_floor: object = FAIL_FLOOR

    def resolve(self, ctx: PrecisionContext):
        default = ctx.tolerance(ctx.digits - 10)
        p = default if self.pass_threshold is None else ctx.mpf(self.pass_threshold)
        s = p if self.series_threshold is None else ctx.mpf(self.series_threshold)
        return p, s, ctx.mpf(self.fail_floor)


@dataclass
class VerifyReport:
    id: str
    status: str
    c: Fraction
    digits: int
    route: str
    verdict: str
    closed_form: str = ""
    closed_value: HPReal | None = None
    series_value: HPReal | None = None
    series_eps: object = None
    rhs_value: HPReal | None = None
    diff_closed: HPReal | None = None
    diff_series: HPReal | None = None
    error: str | None = None
    notes: list = field(default_factory=list)

    @property
    def expected_verdict(self) -> str:
        return "expected-fail" if self.status == "erroneous" else "pass"

    @property
    def ok(self) -> bool:
        return self.verdict == self.expected_verdict


def verify_one(record_id: str | TheoremRecord, ctx: PrecisionContext,
               thresholds: Thresholds | None = None, route: str = DEFAULT_ROUTE) -> VerifyReport:
    """Check one identity via the closed form and the series oracle."""
    record = record_id if isinstance(record_id, TheoremRecord) else get_record(record_id)
    pass_t, series_t, floor = (thresholds or Thresholds()).resolve(ctx)
    try:
        cf = closed_3f2(record.c, route)
        closed = cf.evaluate(ctx)
        series = series_3f2(record.c, ctx)
        rhs = ast_eval(record.rhs, ctx)
    except (DomainError, AccuracyError) as exc:
        raise type(exc)(f"record {record.id}: {exc}") from exc

    diff_closed = abs(closed - rhs)
    diff_series = abs(series.value - rhs)
    if record.status == "erroneous":
        refuted = diff_closed.value > floor and diff_series.value > floor
        verdict = "expected-fail" if refuted else "fail"
    else:
        holds = diff_closed.value < pass_t and diff_series.value < series.eps + series_t
        verdict = "pass" if holds else "fail"
    return VerifyReport(
        id=record.id,
        status=record.status,
        c=record.c,
        digits=ctx.digits,
        route=route,
        verdict=verdict,
        closed_form=cf.render(),
        closed_value=closed,
        series_value=series.value,
        series_eps=series.eps,
        rhs_value=rhs,
        diff_closed=diff_closed,
        diff_series=diff_series,
    )


def verify_all(ctx: PrecisionContext, thresholds: Thresholds | None = None,
               route: str = DEFAULT_ROUTE, ids=None) -> list[VerifyReport]:
    """Reports for every record (or ``ids``), ordered by id.  A record that
    raises gets a ``fail`` report carrying the error instead of aborting."""
    records = load_database()
    if ids is not None:
        wanted = set(ids)
        records = [r for r in records if r.id in wanted]
    reports = []
    for record in records:
        try:
            reports.append(verify_one(record, ctx, thresholds, route))
        except (DomainError, AccuracyError, ArithmeticError) as exc:
            reports.append(VerifyReport(record.id, record.status, record.c, ctx.digits, route,
                                        "fail", error=str(exc)))
    return reports


def summarize(reports) -> dict:
    counts = {"pass": 0, "fail": 0, "expected_fail": 0}
    for r in reports:
        counts["expected_fail" if r.verdict == "expected-fail" else r.verdict] += 1
    return counts
