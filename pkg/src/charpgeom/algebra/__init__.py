"""Exact arithmetic kernels: finite fields, polynomials, jets, Groebner."""

from .finitefield import FF, FiniteField, FFElement, pth_root
from .unipoly import UPoly, RatFunc, RatFuncField, ratfunc_pth_root
from .multipoly import MultiPoly, RatExpr, parse_poly, hessian_at, det
from .jets import Jet, jet_compose
from .groebner import (
    IdealCertificate, MembershipResult, groebner_membership_one,
    buchberger, reduce_poly, grevlex_key, leading_term, standard_monomial_count,
)

__all__ = [
    "FF", "FiniteField", "FFElement", "pth_root",
    "UPoly", "RatFunc", "RatFuncField", "ratfunc_pth_root",
    "MultiPoly", "RatExpr", "parse_poly", "hessian_at", "det",
    "Jet", "jet_compose",
    "IdealCertificate", "MembershipResult", "groebner_membership_one",
    "buchberger", "reduce_poly", "grevlex_key", "leading_term",
    "standard_monomial_count",
]
