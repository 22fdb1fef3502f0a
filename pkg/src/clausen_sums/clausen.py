"""The family F(c) = 3F2[1, 1, c; 2, c+1; 1].

Its m-th term reduces to c / ((m+1)(m+c)), so

    F(c) = c/(c-1) * (psi(c) + gamma)                  (partial fractions)
         = (1+z)/z * (psi(z) + gamma + 1/z),  z = c - 1  (shifted form)

``closed_3f2`` uses the shifted form with the closed digamma routes;
``series_3f2`` and ``telescoped_3f2`` are numerical checks that never touch
the closed forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from clausen_sums.closedform import GAMMA, ClosedForm
from clausen_sums.digamma import DEFAULT_ROUTE, psi_closed, psi_series
from clausen_sums.errors import PoleError, SingularCaseError
from clausen_sums.hp import HPReal, PrecisionContext, const_gamma, const_pi
from clausen_sums.rational import pochhammer
from clausen_sums.series import DEFAULT_TERM_CAP, SeriesResult, kummer_sum

PFQ_TERM_CAP = 10**6


def check_parameter(c) -> Fraction:
    c = Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise PoleError(f"c = {c}: the term c/((m+1)(m+c)) is infinite at m = {-c}")
    return c


def c_from_pq(p: int, q: int) -> Fraction:
    """c = (p+q)/q, the parameter that pairs with psi(p/q)."""
    return Fraction(p + q, q)


def term_3f2(c, m: int) -> Fraction:
    """m-th term, computed from Pochhammer symbols and checked against
    the reduced form c/((m+1)(m+c))."""
    c = check_parameter(c)
    if m < 0:
        raise ValueError("term index must be nonnegative")
    one_m = pochhammer(1, m)
    full = one_m * one_m * pochhammer(c, m) / (pochhammer(2, m) * pochhammer(c + 1, m) * one_m)
    reduced = c / ((m + 1) * (m + c))
    if full != reduced:
        raise ArithmeticError(f"term mismatch at c={c}, m={m}: {full} != {reduced}")
    return full


def closed_3f2(c, route: str = DEFAULT_ROUTE) -> ClosedForm:
    """Closed form of F(c) for every valid c except c = 1.

    For c = (p+q)/q with 1 <= p < q this is the comparison of the two
    digamma representations at z = p/q; other c follow from the recurrence
    inside :func:`psi_closed`.
    """
    c = check_parameter(c)
    if c == 1:
        raise SingularCaseError("c = 1: the closed form degenerates; use basel_case() for pi**2/6")
    z = c - 1
    bracket = psi_closed(z, route) + ClosedForm([(GAMMA, 1)]) + ClosedForm.constant(1 / z)
    result = bracket.scale((1 + z) / z)
    if result.coefficient(GAMMA) != 0:
        raise ArithmeticError(f"Euler's constant failed to cancel for c={c}: {result}")
    return result


def basel_case(ctx: PrecisionContext) -> HPReal:
    """F(1) = sum 1/(m+1)**2 = pi**2/6."""
    pi = const_pi(ctx)
    return pi * pi / Fraction(6)


def series_3f2(c, ctx: PrecisionContext, target_digits: int | None = None,
               term_cap: int = DEFAULT_TERM_CAP) -> SeriesResult:
    """F(c) from its Maclaurin series with a certified error bound."""
    c = check_parameter(c)
    target = ctx.digits if target_digits is None else target_digits
    if target > ctx.digits:
        raise ValueError(f"target_digits={target} exceeds context digits={ctx.digits}")
    mp = ctx.mp
    scale = len(str(abs(c.numerator) // c.denominator))
    inner = kummer_sum(c - 1, ctx, target + scale + 2, term_cap)
    value = inner.value * c
    bound = abs(mp.mpf(c.numerator) / c.denominator) * inner.error_bound
    bound += 4 * (abs(value.value) + 1) * mp.mpf(2) ** (-mp.prec)
    return SeriesResult(value, bound, inner.terms, inner.kummer_order)


def partial_sum_3f2(c, N: int) -> Fraction:
    """Exact S_N = sum_{m=0}^{N} c/((m+1)(m+c))."""
    c = check_parameter(c)
    return sum((c / ((m + 1) * (m + c)) for m in range(N + 1)), Fraction(0))


def partial_sums_3f2(c, N: int):
    """Yield the exact partial sums S_0, ..., S_N."""
    c = check_parameter(c)
    s = Fraction(0)
    for m in range(N + 1):
        s += c / ((m + 1) * (m + c))
        yield s


def telescoped_3f2(c, ctx: PrecisionContext) -> HPReal:
    """F(c) = c/(c-1) * (psi(c) + gamma), with psi(c) from the series oracle."""
    c = check_parameter(c)
    if c == 1:
        raise SingularCaseError("c = 1: c/(c-1) is singular; use basel_case()")
    psi_c = psi_series(c, ctx).value
    return (psi_c + const_gamma(ctx)) * (c / (c - 1))


def pfq_partial(upper: Sequence, lower: Sequence, x, N: int,
                term_cap: int = PFQ_TERM_CAP) -> Fraction:
    """Exact partial sum sum_{m=0}^{N} prod (a)_m / prod (b)_m * x**m / m!."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N > term_cap:
        raise ValueError(f"N={N} exceeds the exact-sum cap {term_cap}")
    upper = [Fraction(a) for a in upper]
    lower = [Fraction(b) for b in lower]
    x = Fraction(x)
    for b in lower:
        if b.denominator == 1 and b <= 0 and -b < N:
            raise ValueError(
                f"lower parameter {b} makes term {int(-b) + 1} divide by zero"
            )
    term = Fraction(1)
    total = Fraction(1)
    for m in range(N):
        num = x
        for a in upper:
            num *= a + m
        if num == 0:
            break
        den = Fraction(m + 1)
        for b in lower:
            den *= b + m
        term = term * num / den
        total += term
    return total
