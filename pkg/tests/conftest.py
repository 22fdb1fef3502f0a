import pytest

from clausen_sums.hp import PrecisionContext


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionContext(50)


def close(a, b, k):
    """|a - b| < 10**-k for HPReal/mpf/str operands."""
    from mpmath import mpf, mp

    def raw(x):
        x = getattr(x, "value", x)
        return mpf(x) if isinstance(x, str) else x

    with mp.workdps(k + 20):
        return abs(raw(a) - raw(b)) < mpf(10) ** (-k)


ACCEPTANCE_LINES = {}


def record_criterion(key, title, passed, detail=""):
    ACCEPTANCE_LINES[key] = f"[{'PASS' if passed else 'FAIL'}] {key}: {title}" + (f"  ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
