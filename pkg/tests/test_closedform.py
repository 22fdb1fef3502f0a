from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clausen_sums.closedform import (
    GAMMA,
    UNIT,
    ClosedForm,
    CosLnSin,
    LnNat,
    PiCot,
    canonicalize,
    cf_add,
    cf_eval,
    cf_scale,
)
from clausen_sums.errors import DomainError
from clausen_sums.expr import ast_eval, ast_parse
from clausen_sums.hp import PrecisionContext

from conftest import close

CTX = PrecisionContext(30)

angles = st.fractions(min_value=Fraction(1, 24), max_value=Fraction(23, 24), max_denominator=24)
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
atoms = st.one_of(
    st.just(UNIT),
    st.just(GAMMA),
    st.integers(1, 200).map(LnNat),
    angles.filter(lambda a: a.denominator > 1).map(PiCot),
    st.tuples(st.fractions(max_denominator=24), angles.filter(lambda b: b.denominator > 1)).map(
        lambda ab: CosLnSin(*ab)
    ),
)
forms = st.lists(st.tuples(atoms, coeffs), max_size=6).map(ClosedForm)


def test_additive_inverse():
    x = ClosedForm([(GAMMA, 1), (LnNat(2), 3), (PiCot(Fraction(1, 5)), Fraction(-1, 2))])
    assert len(cf_add(x, cf_scale(x, -1))) == 0
    assert cf_scale(x, 1) == x


def test_gamma_cancellation():
    a = ClosedForm({GAMMA: 1})
    b = ClosedForm({GAMMA: -1, LnNat(2): 3})
    assert cf_add(a, b) == ClosedForm({LnNat(2): 3})
    assert cf_add(a, b).coefficient(GAMMA) == 0


def test_eval_two_thirds_form():
    cf = cf_scale(ClosedForm({UNIT: 2, LnNat(2): -2}), Fraction(1, 3))
    assert cf_eval(cf, CTX).to_decimal(30) == "0.204568546293369793721845252361"


def test_eval_psi_half_form():
    cf = ClosedForm({GAMMA: -1, LnNat(4): -1})
    # psi(1/2)
    assert close(cf_eval(cf, CTX), "-1.96351002602142347944097633299875556719315960466", 30)


def test_empty_form_is_zero():
    assert cf_eval(ClosedForm(), CTX).value == 0
    assert ClosedForm().render() == "0"


def test_ln_factors_into_primes():
    assert ClosedForm({LnNat(12): 1}) == ClosedForm({LnNat(2): 2, LnNat(3): 1})
    assert len(ClosedForm({LnNat(1): 5})) == 0


def test_picot_folding():
    assert ClosedForm({PiCot(Fraction(3, 4)): 1}) == ClosedForm({PiCot(Fraction(1, 4)): -1})
    assert len(ClosedForm({PiCot(Fraction(1, 2)): 7})) == 0
    with pytest.raises(DomainError):
        ClosedForm({PiCot(Fraction(2)): 1})


def test_cos_ln_sin_special_values():
    # beta = 1/2 drops: ln sin(pi/2) = 0
    assert len(ClosedForm({CosLnSin(Fraction(1, 7), Fraction(1, 2)): 3})) == 0
    # alpha = 1/4: cos(pi/2) = 0
    assert len(ClosedForm({CosLnSin(Fraction(1, 4), Fraction(1, 5)): 3})) == 0
    # cos(2 pi/3) = -1/2, sin(pi/6) = 1/2
    assert ClosedForm({CosLnSin(Fraction(1, 3), Fraction(1, 6)): 1}) == ClosedForm({LnNat(2): Fraction(1, 2)})
    with pytest.raises(DomainError):
        ClosedForm({CosLnSin(Fraction(1, 3), Fraction(0)): 1})


@settings(max_examples=200)
@given(st.lists(st.tuples(atoms, coeffs), max_size=6))
def test_canonicalization_idempotent(terms):
    once = canonicalize(terms)
    assert canonicalize(once) == once
    assert ClosedForm(ClosedForm(terms).terms) == ClosedForm(terms)


@settings(max_examples=60)
@given(st.lists(st.tuples(atoms, coeffs), max_size=6))
def test_canonicalization_preserves_value(terms):
    raw = CTX.mp.fsum(atom.evaluate(CTX).value * c for atom, c in terms) if terms else CTX.mp.zero
    assert close(cf_eval(ClosedForm(terms), CTX), raw, 28)


@settings(max_examples=60)
@given(forms, forms)
def test_eval_linear(a, b):
    lhs = cf_eval(cf_add(a, b), CTX)
    rhs = cf_eval(a, CTX) + cf_eval(b, CTX)
    assert close(lhs, rhs, 28)


@settings(max_examples=60)
@given(forms, angles.filter(lambda a: a.denominator > 1))
def test_dropped_atom_contributes_zero(form, alpha):
    padded = cf_add(form, ClosedForm({CosLnSin(alpha, Fraction(1, 2)): 5}))
    assert padded == form
    assert close(cf_eval(padded, CTX), cf_eval(form, CTX), 28)


@settings(max_examples=60)
@given(forms)
def test_render_parses_back_to_same_value(form):
    assert close(ast_eval(ast_parse(form.render()), CTX), cf_eval(form, CTX), 28)


def test_render_format():
    cf = ClosedForm({UNIT: Fraction(8, 3), GAMMA: -1, LnNat(4): -1,
                     PiCot(Fraction(1, 3)): Fraction(-1, 2),
                     CosLnSin(Fraction(1, 5), Fraction(2, 5)): 2})
    assert cf.render() == ("8/3 - gamma - 2*ln(2) - 1/2*pi*cot(pi*1/3)"
                           " + 2*cos(2*pi*1/5)*ln(sin(pi*2/5))")
