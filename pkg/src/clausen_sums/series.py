"""Certified evaluation of S(z) = sum_{n>=1} 1/(n (n + z)).

Both numerical oracles reduce to this sum: psi(z) = -1/z - gamma + z S(z),
and 3F2[1, 1, c; 2, c+1; 1] = c S(c - 1).

The raw terms decay like n**-2.  After a direct head sum over n < N, every
tail term is rewritten by repeated Kummer subtraction of the comparison
series n**-(j+2):

    1/(n (n+z)) = sum_{j<K} (-z)**j / n**(j+2)  +  (-z)**K / (n**(K+1) (n+z))

The residual decays like n**-(K+2) and is bounded rather than summed.  The
comparison tails sum_{n>=N} n**-m use Euler-Maclaurin; for the completely
monotone n**-m the remainder is bounded by the first omitted correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from clausen_sums.errors import AccuracyError, PoleError
from clausen_sums.hp import HPReal, PrecisionContext, format_decimal

DEFAULT_TERM_CAP = 10**6
MIN_HEAD = 256


@dataclass(frozen=True)
class SeriesResult:
    """A series value with a certified absolute error bound."""

    value: HPReal
    error_bound: object
    terms: int
    kummer_order: int

    @property
    def eps(self):
        return self.error_bound

    def eps_str(self, digits: int = 3) -> str:
        return format_decimal(self.error_bound, digits)


def _hurwitz_tail(m: int, N: int, eps, ctx: PrecisionContext):
    """sum_{n>=N} n**-m for m >= 2, as (value, bound), or None if the
    Euler-Maclaurin corrections stop shrinking before reaching ``eps``."""
    mp = ctx.mp
    Nf = mp.mpf(N)
    power = Nf ** (-m)
    value = Nf * power / (m - 1) + power / 2
    rising = mp.mpf(m)  # (m)_{2k-1}
    npow = power / Nf  # N**(-m-2k+1)
    fact = mp.mpf(2)  # (2k)!
    prev = None
    k = 1
    while True:
        term = mp.bernoulli(2 * k) / fact * rising * npow
        mag = abs(term)
        if mag <= eps:
            return value, mag
        if prev is not None and mag >= prev:
            return None
        value += term
        prev = mag
        rising *= (m + 2 * k - 1) * (m + 2 * k)
        npow /= Nf * Nf
        fact *= (2 * k + 1) * (2 * k + 2)
        k += 1


def _residual_bound(az, K: int, N: int):
    # n + z >= n - |z| >= (3/4) n once N >= 4|z|
    Nf = az.context.mpf(N)
    return az**K * 4 / 3 * (Nf ** (-(K + 2)) + Nf ** (-(K + 1)) / (K + 1))


def kummer_sum(z: Fraction, ctx: PrecisionContext, target_digits: int,
               term_cap: int = DEFAULT_TERM_CAP) -> SeriesResult:
    z = Fraction(z)
    if z.denominator == 1 and z <= -1:
        raise PoleError(f"term 1/(n(n{z:+})) is infinite at n = {-z}")
    mp = ctx.mp
    eps = mp.mpf(10) ** (-target_digits)
    az = mp.mpf(abs(z.numerator)) / z.denominator
    N = max(MIN_HEAD, 16 * math.ceil(abs(z)) + 16)
    max_order = 4 * ctx.working_digits + 20

    best = None
    while N <= term_cap:
        if z == 0:
            K = 1
            resid = mp.zero
        else:
            K = 1
            while K <= max_order and _residual_bound(az, K, N) > eps / 4:
                K += 1
            if K > max_order:
                N *= 2
                continue
            resid = _residual_bound(az, K, N)
        tails = []
        for j in range(K):
            weight = az**j if j else mp.one
            got = _hurwitz_tail(j + 2, N, eps / (4 * K * max(weight, mp.one)), ctx)
            if got is None:
                break
            tails.append(got)
        if len(tails) < K:
            best = resid
            N *= 2
            continue
        break
    else:
        raise AccuracyError(
            f"sum 1/(n(n+{z})) cannot reach 1e-{target_digits} within {term_cap} terms",
            best_bound=best,
        )

    p, q = z.numerator, z.denominator
    head_terms = [mp.mpf(q) / (n * (q * n + p)) for n in range(1, N)]
    head = mp.fsum(head_terms)
    mz = -mp.mpf(p) / q
    tail = mp.zero
    em_err = mp.zero
    coeff = mp.one
    magnitude = mp.fsum(abs(t) for t in head_terms)
    for value, bound in tails:
        tail += coeff * value
        em_err += abs(coeff) * bound
        magnitude += abs(coeff * value)
        coeff *= mz
    total = head + tail
    ops = N + 4 * K * K + 64
    rounding = 8 * ops * magnitude * mp.mpf(2) ** (-mp.prec)
    bound = resid + em_err + rounding
    return SeriesResult(HPReal(total, ctx.digits), bound, N - 1, K)
