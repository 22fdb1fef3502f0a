"""Arbitrary-precision evaluation kernel.

Every evaluation runs in a private ``mpmath.MPContext`` sized to
``digits + guard_digits``; the global ``mpmath.mp`` is never touched, so
callers with different precisions can share the process safely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import MPContext

from clausen_sums.errors import DomainError
from clausen_sums.rational import Angle, normalize_angle

DEFAULT_DIGITS = 50
DEFAULT_GUARD = 15

#: Euler's constant as quoted to 39 decimals in the literature this package
#: reproduces; ``const_gamma`` is self-tested against it.
GAMMA_REFERENCE = "0.577215664901532860606512090082402431042"


@lru_cache(maxsize=None)
def _context(dps: int) -> MPContext:
    ctx = MPContext()
    ctx.dps = dps
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = DEFAULT_DIGITS
    guard_digits: int = DEFAULT_GUARD

    def __post_init__(self):
        if self.digits < 10:
            raise ValueError(f"digits must be >= 10, got {self.digits}")
        if self.guard_digits < 10:
            raise ValueError(f"guard_digits must be >= 10, got {self.guard_digits}")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard_digits

    @property
    def mp(self) -> MPContext:
        return _context(self.working_digits)

    def mpf(self, x):
        if isinstance(x, HPReal):
            return self.mp.mpf(x.value)
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def tolerance(self, k: int):
        """10**(-k) in working precision."""
        return self.mp.mpf(10) ** (-k)


@dataclass(frozen=True)
class HPReal:
    """A high-precision real together with the decimal digits it is good for."""

    value: object
    digits: int

    def _coerce(self, x):
        if isinstance(x, HPReal):
            return x.value
        if isinstance(x, Fraction):
            return self.value.context.mpf(x.numerator) / x.denominator
        return x

    def _wrap(self, value, other=None):
        digits = self.digits if not isinstance(other, HPReal) else min(self.digits, other.digits)
        return HPReal(value, digits)

    def __add__(self, other):
        return self._wrap(self.value + self._coerce(other), other)

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.value - self._coerce(other), other)

    def __rsub__(self, other):
        return self._wrap(self._coerce(other) - self.value, other)

    def __mul__(self, other):
        return self._wrap(self.value * self._coerce(other), other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.value / self._coerce(other), other)

    def __neg__(self):
        return HPReal(-self.value, self.digits)

    def __abs__(self):
        return HPReal(abs(self.value), self.digits)

    def __float__(self):
        return float(self.value)

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __gt__(self, other):
        return self.value > self._coerce(other)

    def to_decimal(self, digits: int | None = None) -> str:
        return format_decimal(self.value, digits or self.digits)

    def __str__(self):
        return self.to_decimal()


def format_decimal(x, digits: int) -> str:
    """Decimal rendering with exactly ``digits`` significant digits."""
    ctx = _context(max(digits + 5, 20))
    x = ctx.mpf(x)
    if x == 0:
        return "0." + "0" * (digits - 1)
    return ctx.nstr(x, digits, strip_zeros=False)


def _hp(ctx: PrecisionContext, value) -> HPReal:
    return HPReal(value, ctx.digits)


def const_pi(ctx: PrecisionContext) -> HPReal:
    return _hp(ctx, +ctx.mp.pi)


def const_gamma(ctx: PrecisionContext) -> HPReal:
    return _hp(ctx, +ctx.mp.euler)


def gamma_self_test(ctx: PrecisionContext | None = None) -> bool:
    """True when ``const_gamma`` reproduces the 39 quoted reference decimals."""
    ctx = ctx or PrecisionContext(60)
    digits = len(GAMMA_REFERENCE) - 2
    got = ctx.mp.nstr(const_gamma(ctx).value, digits + 5, strip_zeros=False)
    return got[: len(GAMMA_REFERENCE)] == GAMMA_REFERENCE


def eval_ln(x, ctx: PrecisionContext) -> HPReal:
    v = ctx.mpf(x)
    if v <= 0:
        raise DomainError(f"ln of nonpositive value {ctx.mp.nstr(v, 10)}")
    return _hp(ctx, ctx.mp.ln(v))


def eval_sqrt(x, ctx: PrecisionContext) -> HPReal:
    v = ctx.mpf(x)
    if v < 0:
        raise DomainError(f"sqrt of negative value {ctx.mp.nstr(v, 10)}")
    return _hp(ctx, ctx.mp.sqrt(v))


def _angle_mpf(a, ctx: PrecisionContext):
    return ctx.mpf(normalize_angle(a).value)


def eval_sin_pi(a: Angle | Fraction, ctx: PrecisionContext) -> HPReal:
    """sin(pi*a)."""
    return _hp(ctx, ctx.mp.sinpi(_angle_mpf(a, ctx)))


def eval_cos_pi(a: Angle | Fraction, ctx: PrecisionContext) -> HPReal:
    """cos(pi*a)."""
    return _hp(ctx, ctx.mp.cospi(_angle_mpf(a, ctx)))


def eval_cos_2pi(a: Angle | Fraction, ctx: PrecisionContext) -> HPReal:
    """cos(2*pi*a)."""
    return _hp(ctx, ctx.mp.cospi(2 * _angle_mpf(a, ctx)))


def eval_cot_pi(a: Angle | Fraction, ctx: PrecisionContext) -> HPReal:
    """cot(pi*a); a = 0 (mod 1) is a pole."""
    angle = normalize_angle(a)
    if angle.value == 0:
        raise DomainError(f"cot(pi*{a}) is a pole")
    if angle.value == Fraction(1, 2):
        return _hp(ctx, ctx.mp.zero)
    x = _angle_mpf(angle, ctx)
    return _hp(ctx, ctx.mp.cospi(x) / ctx.mp.sinpi(x))
