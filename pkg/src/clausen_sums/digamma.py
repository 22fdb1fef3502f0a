"""Digamma at rational arguments.

Two closed routes (the classical Gauss formula and its ln-sine restatement)
produce :class:`ClosedForm` values for psi(p/q), 0 < p/q < 1.  ``psi_closed``
extends either route to every non-pole rational by the recurrence
psi(z+1) = psi(z) + 1/z.  ``psi_series`` is the independent numerical
oracle built on the defining series

    psi(z) = -1/z - gamma + sum_{n>=1} z / (n (n+z)),

and ``psi_hyp`` goes through the Clausen closed form as a consistency route.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

from clausen_sums.closedform import GAMMA, UNIT, ClosedForm, CosLnSin, LnNat, PiCot
from clausen_sums.errors import AccuracyError, PoleError
from clausen_sums.hp import HPReal, PrecisionContext, const_gamma
from clausen_sums.series import DEFAULT_TERM_CAP, SeriesResult, kummer_sum

log = logging.getLogger(__name__)

ROUTES = ("murty", "gauss")
DEFAULT_ROUTE = "murty"


def _check_pq(p: int, q: int):
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError("p and q must be integers")
    if not 1 <= p < q:
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p/q must be reduced, gcd({p}, {q}) = {math.gcd(p, q)}")


def psi_murty(p: int, q: int) -> ClosedForm:
    """psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
    + 2 sum_{j=1}^{floor(q/2)} cos(2 pi p j/q) ln sin(pi j/q)."""
    _check_pq(p, q)
    terms = [(GAMMA, -1), (LnNat(2 * q), -1), (PiCot(Fraction(p, q)), Fraction(-1, 2))]
    for j in range(1, q // 2 + 1):
        terms.append((CosLnSin(Fraction(p * j, q), Fraction(j, q)), 2))
    return ClosedForm(terms)


def psi_gauss(p: int, q: int) -> ClosedForm:
    """psi(p/q) = -gamma - ln q - (pi/2) cot(pi p/q)
    + sum'_{j=1}^{floor(q/2)} cos(2 pi j p/q) ln(2 - 2 cos(2 pi j/q)).

    The primed sum halves the j = q/2 term when q is even.  Each logarithm
    is expanded as ln 4 + 2 ln sin(pi j/q), with ln 4 = -2 ln sin(pi/6) so
    the cosine-weighted ln 4 stays inside the atom basis.
    """
    _check_pq(p, q)
    terms = [(GAMMA, -1), (LnNat(q), -1), (PiCot(Fraction(p, q)), Fraction(-1, 2))]
    for j in range(1, q // 2 + 1):
        weight = Fraction(1, 2) if 2 * j == q else Fraction(1)
        alpha = Fraction(p * j, q)
        terms.append((CosLnSin(alpha, Fraction(1, 6)), -2 * weight))
        terms.append((CosLnSin(alpha, Fraction(j, q)), 2 * weight))
    return ClosedForm(terms)


_ROUTE_FUNCS = {"murty": psi_murty, "gauss": psi_gauss}


def check_psi_argument(r: Fraction) -> Fraction:
    r = Fraction(r)
    if r.denominator == 1 and r <= 0:
        raise PoleError(f"psi has a pole at {r}")
    return r


def psi_closed(r, route: str = DEFAULT_ROUTE) -> ClosedForm:
    """Closed form of psi(r) for any rational r that is not a pole."""
    r = check_psi_argument(r)
    if route not in _ROUTE_FUNCS:
        raise ValueError(f"unknown route {route!r}, expected one of {ROUTES}")
    n = r.numerator // r.denominator
    f = r - n
    if f == 0:
        # psi(m) = -gamma + H_{m-1}
        return ClosedForm([(GAMMA, -1), (UNIT, sum((Fraction(1, k) for k in range(1, n)), Fraction(0)))])
    base = _ROUTE_FUNCS[route](f.numerator, f.denominator)
    if n >= 0:
        shift = sum((1 / (f + k) for k in range(n)), Fraction(0))
    else:
        shift = -sum((1 / (f + k) for k in range(n, 0)), Fraction(0))
    return base + ClosedForm.constant(shift)


def psi_closed_pq(p: int, q: int, route: str = DEFAULT_ROUTE) -> ClosedForm:
    """``psi_closed(p/q)`` accepting unreduced p, q (reduced with a log notice)."""
    g = math.gcd(p, q)
    if g > 1:
        log.info("reducing %d/%d to %d/%d before applying the %s formula", p, q, p // g, q // g, route)
    return psi_closed(Fraction(p, q), route)


def psi_series(r, ctx: PrecisionContext, target_digits: int | None = None,
               term_cap: int = DEFAULT_TERM_CAP) -> SeriesResult:
    """psi(r) from the defining series, with a certified bound <= 10**-target."""
    r = check_psi_argument(r)
    target = ctx.digits if target_digits is None else target_digits
    if target > ctx.digits:
        raise ValueError(f"target_digits={target} exceeds context digits={ctx.digits}")
    mp = ctx.mp
    scale = max(1, math.ceil(math.log10(abs(r)))) if abs(r) > 1 else 0
    inner = kummer_sum(r, ctx, target + scale + 2, term_cap)
    rf = mp.mpf(r.numerator) / r.denominator
    value = -1 / rf - const_gamma(ctx).value + rf * inner.value.value
    bound = abs(rf) * inner.error_bound + 4 * (abs(value) + 1) * mp.mpf(2) ** (-mp.prec)
    if bound > mp.mpf(10) ** (-target):
        raise AccuracyError(f"psi({r}) series reached only {mp.nstr(bound, 3)}", best_bound=bound)
    return SeriesResult(HPReal(value, ctx.digits), bound, inner.terms, inner.kummer_order)


def psi_hyp(r, ctx: PrecisionContext, route: str = DEFAULT_ROUTE) -> HPReal:
    """psi(r) = -1/r - gamma + r/(1+r) * 3F2[1, 1, 1+r; 2, 2+r; 1]."""
    from clausen_sums.clausen import closed_3f2

    r = check_psi_argument(r)
    if r == -1:
        raise PoleError("psi_hyp: prefactor r/(1+r) has a pole at r = -1")
    F = closed_3f2(1 + r, route).evaluate(ctx)
    return -const_gamma(ctx) + F * (r / (1 + r)) - (1 / r)
