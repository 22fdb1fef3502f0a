"""Exact rational helpers: construction, parsing, Pochhammer symbols and
angle reduction.  Rationals are :class:`fractions.Fraction` throughout."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from clausen_sums.errors import ParseError

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def make_rational(n: int, d: int = 1) -> Fraction:
    """Reduced fraction n/d with positive denominator."""
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {n}/{d}")
    return Fraction(int(n), int(d))


def parse_rational(text: str) -> Fraction:
    """Parse ``"n/d"`` or ``"n"``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"expected a rational like '3' or '-2/5', got {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", position=text.index("/") + 1, text=text)
    return Fraction(num, den)


def format_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def pochhammer(a: Fraction | int, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1 for every a."""
    if n < 0:
        raise ValueError("pochhammer index must be nonnegative")
    a = Fraction(a)
    result = Fraction(1)
    for k in range(n):
        result *= a + k
    return result


@dataclass(frozen=True, order=True)
class Angle:
    """A rational multiple of a full period, reduced into [0, 1).

    Whether ``value`` means ``value*pi`` or ``value*2*pi`` is decided by the
    atom that holds it.
    """

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - (v.numerator // v.denominator))

    def __str__(self):
        return format_rational(self.value)


def normalize_angle(a: Fraction | int | Angle) -> Angle:
    if isinstance(a, Angle):
        return a
    return Angle(Fraction(a))
