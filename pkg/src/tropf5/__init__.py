"""Tropical Groebner bases in the homogenized Weyl algebra, F5 and Buchberger."""

from .buchberger import buchberger, groebner_failures, same_leading_ideal, verify_groebner
from .orders import ModMono, OrderConfig, SyzygySet, leading, leading_monomial
from .parser import ParseError, parse_operator
from .reduction import normal_form, s_top_reduce
from .sigengine import (
    Signature, SigOperator, Stats, f5_groebner, is_redundant, make_normal_pairs, prune, sig_gr,
    spair,
)
from .valfield import Valuation, p_adic_valuation
from .weylcore import Operator, dehomogenize, format_operator, homogenize

__all__ = [
    "ModMono", "Operator", "OrderConfig", "ParseError", "SigOperator", "Signature", "Stats",
    "SyzygySet", "Valuation", "buchberger", "dehomogenize", "f5_groebner", "format_operator",
    "groebner_failures", "homogenize", "is_redundant", "leading", "leading_monomial",
    "make_normal_pairs", "normal_form", "p_adic_valuation", "parse_operator", "prune",
    "s_top_reduce", "same_leading_ideal", "sig_gr", "spair", "verify_groebner",
]
