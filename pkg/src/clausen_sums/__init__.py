"""Closed-form digamma values at rational arguments and the unit-argument
Clausen family 3F2[1, 1, c; 2, c+1; 1], with independent numerical checks."""

from clausen_sums.errors import (
    AccuracyError,
    DomainError,
    ParseError,
    PoleError,
    SingularCaseError,
)
from clausen_sums.rational import Angle, make_rational, normalize_angle, parse_rational, pochhammer
from clausen_sums.hp import HPReal, PrecisionContext, const_gamma, const_pi
from clausen_sums.closedform import Atom, ClosedForm, cf_add, cf_eval, cf_scale
from clausen_sums.expr import ast_eval, ast_parse, ast_render
from clausen_sums.digamma import psi_closed, psi_gauss, psi_hyp, psi_murty, psi_series
from clausen_sums.clausen import (
    basel_case,
    closed_3f2,
    pfq_partial,
    series_3f2,
    telescoped_3f2,
    term_3f2,
)
from clausen_sums.theorems import load_database, verify_all, verify_one

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "Angle",
    "Atom",
    "ClosedForm",
    "DomainError",
    "HPReal",
    "ParseError",
    "PoleError",
    "PrecisionContext",
    "SingularCaseError",
    "ast_eval",
    "ast_parse",
    "ast_render",
    "basel_case",
    "cf_add",
    "cf_eval",
    "cf_scale",
    "closed_3f2",
    "const_gamma",
    "const_pi",
    "load_database",
    "make_rational",
    "normalize_angle",
    "parse_rational",
    "pfq_partial",
    "pochhammer",
    "psi_closed",
    "psi_gauss",
    "psi_hyp",
    "psi_murty",
    "psi_series",
    "series_3f2",
    "telescoped_3f2",
    "term_3f2",
    "verify_all",
    "verify_one",
]
