"""Structured closed forms: rational linear combinations of constant atoms.

The atom basis is

    Unit              1
    EulerGamma        Euler's constant
    LnNat(n)          ln n                      (n prime after canonicalization)
    PiCot(t)          pi * cot(pi t)            (0 < t < 1/2)
    CosLnSin(a, b)    cos(2 pi a) * ln sin(pi b) (0 <= a < 1/4, 0 < b < 1/2)

Canonicalization rewrites any atom into a combination of canonical atoms
using periodicity and parity of the trig functions, the rational values of
cos(2 pi a) at a in {0, 1/6, 1/4, 1/3, 1/2}, and the logarithms of the
algebraic sines sin(pi/6), sin(pi/4), sin(pi/3), sin(pi/2).  Coefficients
stay rational, so cancellation of Euler's constant is a syntactic fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from clausen_sums.errors import DomainError
from clausen_sums.hp import (
    HPReal,
    PrecisionContext,
    const_gamma,
    const_pi,
    eval_cos_2pi,
    eval_cot_pi,
    eval_ln,
    eval_sin_pi,
)
from clausen_sums.rational import Angle, format_rational, normalize_angle

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Atom:
    """Base class; concrete atoms below.  ``sort_key`` fixes rendering order."""

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def canonical(self) -> dict[Atom, Fraction]:
        return {self: Fraction(1)}

    def evaluate(self, ctx: PrecisionContext) -> HPReal:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Unit(Atom):
    def sort_key(self):
        return (0,)

    def evaluate(self, ctx):
        return HPReal(ctx.mp.one, ctx.digits)

    def render(self):
        return "1"


@dataclass(frozen=True)
class EulerGamma(Atom):
    def sort_key(self):
        return (1,)

    def evaluate(self, ctx):
        return const_gamma(ctx)

    def render(self):
        return "gamma"


@dataclass(frozen=True)
class LnNat(Atom):
    n: int

    def sort_key(self):
        return (2, self.n)

    def canonical(self):
        if self.n < 1:
            raise DomainError(f"ln({self.n}) is not a natural-number logarithm")
        return {LnNat(p): Fraction(e) for p, e in _factorize(self.n).items()}

    def evaluate(self, ctx):
        return eval_ln(self.n, ctx)

    def render(self):
        return f"ln({self.n})"


@dataclass(frozen=True)
class PiCot(Atom):
    """pi * cot(pi * theta)."""

    theta: Angle

    def __init__(self, theta):
        object.__setattr__(self, "theta", normalize_angle(theta))

    def sort_key(self):
        return (3, self.theta.value)

    def canonical(self):
        t = self.theta.value
        if t == 0:
            raise DomainError("pi*cot(pi*0) is a pole")
        if t == HALF:
            return {}
        if t > HALF:
            return {PiCot(1 - t): Fraction(-1)}
        return {self: Fraction(1)}

    def evaluate(self, ctx):
        return const_pi(ctx) * eval_cot_pi(self.theta, ctx)

    def render(self):
        return f"pi*cot(pi*{self.theta})"


@dataclass(frozen=True)
class CosLnSin(Atom):
    """cos(2*pi*alpha) * ln(sin(pi*beta))."""

    alpha: Angle
    beta: Angle

    def __init__(self, alpha, beta):
        object.__setattr__(self, "alpha", normalize_angle(alpha))
        object.__setattr__(self, "beta", normalize_angle(beta))

    def sort_key(self):
        return (4, self.alpha.value, self.beta.value)

    def canonical(self):
        a, b = self.alpha.value, self.beta.value
        if b == 0:
            raise DomainError("ln(sin(pi*0)) is undefined")
        if b > HALF:
            b = 1 - b
        if b == HALF:
            return {}
        coeff = Fraction(1)
        if a > HALF:
            a = 1 - a
        if a > QUARTER:
            a, coeff = HALF - a, -coeff
        if a == QUARTER:
            return {}
        if a == Fraction(1, 6):
            a, coeff = Fraction(0), coeff * HALF
        if a == 0 and b in _LN_SIN_RATIONAL:
            return {atom: coeff * c for atom, c in _LN_SIN_RATIONAL[b].items()}
        return {CosLnSin(a, b): coeff}

    def evaluate(self, ctx):
        return eval_cos_2pi(self.alpha, ctx) * eval_ln(eval_sin_pi(self.beta, ctx), ctx)

    def render(self):
        lns = f"ln(sin(pi*{self.beta}))"
        if self.alpha.value == 0:
            return lns
        return f"cos(2*pi*{self.alpha})*{lns}"


# ln sin(pi*b) for the b in (0, 1/2) where sin^2 is rational
_LN_SIN_RATIONAL = {
    Fraction(1, 6): {LnNat(2): Fraction(-1)},
    Fraction(1, 4): {LnNat(2): Fraction(-1, 2)},
    Fraction(1, 3): {LnNat(3): Fraction(1, 2), LnNat(2): Fraction(-1)},
}

UNIT = Unit()
GAMMA = EulerGamma()


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def canonicalize(terms: Mapping[Atom, Fraction] | Iterable[tuple[Atom, Fraction]]) -> dict[Atom, Fraction]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    out: dict[Atom, Fraction] = {}
    for atom, coeff in items:
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        for canon, c in atom.canonical().items():
            out[canon] = out.get(canon, Fraction(0)) + coeff * c
    return {a: c for a, c in out.items() if c != 0}


class ClosedForm:
    """Immutable canonical combination ``sum(coeff * atom)``.

    Equality is structural; two forms with the same value may still differ
    (the atoms obey multiple-angle relations), so semantic comparisons go
    through :func:`cf_eval`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Atom, Fraction] | Iterable[tuple[Atom, Fraction]] = ()):
        canon = canonicalize(terms)
        self._terms = tuple(sorted(canon.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def constant(cls, r) -> ClosedForm:
        return cls({UNIT: Fraction(r)})

    @property
    def terms(self) -> dict[Atom, Fraction]:
        return dict(self._terms)

    def coefficient(self, atom: Atom) -> Fraction:
        return dict(self._terms).get(atom, Fraction(0))

    def is_rational(self) -> bool:
        return all(isinstance(a, Unit) for a, _ in self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, ClosedForm) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        if not isinstance(other, ClosedForm):
            other = ClosedForm.constant(other)
        merged = dict(self._terms)
        for atom, c in other._terms:
            merged[atom] = merged.get(atom, Fraction(0)) + c
        return ClosedForm(merged)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, ClosedForm) else -Fraction(other))

    def scale(self, r) -> ClosedForm:
        r = Fraction(r)
        return ClosedForm((a, c * r) for a, c in self._terms)

    def __mul__(self, r):
        return self.scale(r)

    __rmul__ = __mul__

    def evaluate(self, ctx: PrecisionContext) -> HPReal:
        total = HPReal(ctx.mp.zero, ctx.digits)
        for atom, c in self._terms:
            total = total + atom.evaluate(ctx) * c
        return total

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for atom, c in self._terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if isinstance(atom, Unit):
                body = format_rational(mag)
            elif mag == 1:
                body = atom.render()
            else:
                body = f"{format_rational(mag)}*{atom.render()}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"ClosedForm({self.render()!r})"


def cf_add(a: ClosedForm, b: ClosedForm) -> ClosedForm:
    return a + b


def cf_scale(a: ClosedForm, r) -> ClosedForm:
    return a.scale(r)


def cf_eval(a: ClosedForm, ctx: PrecisionContext) -> HPReal:
    return a.evaluate(ctx)
