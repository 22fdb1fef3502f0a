from fractions import Fraction
import random

import pytest
from mpmath import mpf

from clausen_sums.errors import DomainError
from clausen_sums.hp import (
    GAMMA_REFERENCE,
    PrecisionContext,
    const_gamma,
    const_pi,
    eval_cos_2pi,
    eval_cos_pi,
    eval_cot_pi,
    eval_ln,
    eval_sin_pi,
    eval_sqrt,
    format_decimal,
    gamma_self_test,
)

from conftest import close


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(9)
    with pytest.raises(ValueError):
        PrecisionContext(20, guard_digits=5)
    assert PrecisionContext(20).working_digits == 35


def test_contexts_do_not_share_precision():
    import mpmath

    before = mpmath.mp.dps
    a = const_pi(PrecisionContext(100)).value
    b = const_pi(PrecisionContext(20)).value
    assert mpmath.mp.dps == before
    assert a.context.dps == 115 and b.context.dps == 35


def test_pi_15_digits():
    assert const_pi(PrecisionContext(15)).to_decimal(15) == "3.14159265358979"


def test_pi_10_digit_interval():
    v = const_pi(PrecisionContext(10)).value
    assert mpf("3.1415926535") <= v < mpf("3.1415926536")


def test_pi_precision_monotone():
    lo = const_pi(PrecisionContext(15)).to_decimal(15)
    hi = const_pi(PrecisionContext(30)).to_decimal(30)
    assert hi.startswith(lo[:-1])


@pytest.mark.parametrize("digits, expected", [
    (30, "0.577215664901532860606512090082"),
    (10, "0.5772156649"),
])
def test_gamma_digits(digits, expected):
    assert const_gamma(PrecisionContext(digits)).to_decimal(digits) == expected


def test_gamma_matches_39_reference_digits():
    text = const_gamma(PrecisionContext(60)).to_decimal(60)
    assert text[: len(GAMMA_REFERENCE)] == GAMMA_REFERENCE
    assert gamma_self_test()


def test_trig_examples(ctx30):
    assert close(eval_sin_pi(Fraction(1, 2), ctx30), 1, 35)
    assert close(eval_cot_pi(Fraction(1, 4), ctx30), 1, 35)
    assert close(eval_cos_2pi(Fraction(1, 3), ctx30), "-0.5", 35)
    assert eval_cot_pi(Fraction(1, 2), ctx30).value == 0


def test_domain_errors(ctx30):
    with pytest.raises(DomainError):
        eval_ln(0, ctx30)
    with pytest.raises(DomainError):
        eval_ln(-1, ctx30)
    with pytest.raises(DomainError):
        eval_sqrt(-2, ctx30)
    with pytest.raises(DomainError):
        eval_cot_pi(Fraction(3), ctx30)


def _random_angles(n, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        q = rng.randint(2, 200)
        p = rng.randint(1, q - 1)
        out.append(Fraction(p, q))
    return out


def test_pythagorean(ctx30):
    for a in _random_angles(100):
        s = eval_sin_pi(a, ctx30)
        c = eval_cos_pi(a, ctx30)
        assert close(s * s + c * c, 1, 30)


def test_cot_times_sin_is_cos(ctx30):
    for a in _random_angles(100, seed=11):
        assert close(eval_cot_pi(a, ctx30) * eval_sin_pi(a, ctx30), eval_cos_pi(a, ctx30), 30)


@pytest.mark.parametrize("fn, arg", [
    (lambda x, c: eval_ln(x, c), 7),
    (lambda x, c: eval_sqrt(x, c), 5),
    (lambda x, c: eval_sin_pi(x, c), Fraction(3, 7)),
    (lambda x, c: eval_cot_pi(x, c), Fraction(2, 9)),
])
def test_precision_monotonicity(fn, arg):
    digits = 25
    lo = fn(arg, PrecisionContext(digits))
    hi = fn(arg, PrecisionContext(2 * digits))
    assert close(lo, hi, digits - 2)


def test_format_decimal_digit_count():
    assert format_decimal(mpf(2), 5) == "2.0000"
    assert format_decimal(mpf(0), 4) == "0.000"
    assert format_decimal(mpf("1e-52"), 3) == "1.00e-52"
