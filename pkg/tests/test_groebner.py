"""Membership-of-1 engine: certificates, negative proofs, budget honesty."""

import random

from charpgeom.algebra.finitefield import FF
from charpgeom.algebra.multipoly import MultiPoly
from charpgeom.algebra.groebner import (
    groebner_membership_one, buchberger, grevlex_key, leading_term,
    reduce_poly, standard_monomial_count,
)


def test_grevlex_order_basics():
    # degree dominates; ties broken by the reversed-exponent rule
    assert grevlex_key((2, 0)) > grevlex_key((1, 0))
    assert grevlex_key((1, 1)) > grevlex_key((0, 2))   # x*y > y^2
    assert grevlex_key((2, 0)) > grevlex_key((1, 1))   # x^2 > x*y
    # standard grevlex in 3 vars: x*z < y^2
    assert grevlex_key((0, 2, 0)) > grevlex_key((1, 0, 1))


def test_unit_from_x_and_1_plus_x():
    fld = FF(5)
    x = MultiPoly.var(fld, 1, 0)
    res = groebner_membership_one([x, 1 + x])
    assert res.status == "certificate"
    assert res.certificate.verify()
    # the cofactors witness 1*(1+x) - 1*(x) = 1 up to scaling
    gens = res.certificate.generators
    cof = res.certificate.cofactors
    acc = MultiPoly(fld, 1)
    for c, g in zip(cof, gens):
        acc = acc + c * g
    assert acc == MultiPoly.const(fld, 1, 1)


def test_x2_y2_not_unit_ideal():
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    res = groebner_membership_one([x ** 2, y ** 2])
    assert res.status == "not_in_ideal"
    leads = sorted(leading_term(b)[0] for b in res.basis)
    assert leads == [(0, 2), (2, 0)]
    assert standard_monomial_count(res.basis) == 4


def test_literal_spec_generator_set_has_common_zero():
    # {2u1, 2u2, 1 + u1^2 + u2^2 - v*w} vanishes at (0, 0, 1, 1): 1 is NOT
    # in the ideal, so no certificate can exist for the literal set
    fld = FF(5)
    u1, u2, v, w = MultiPoly.variables(fld, 4)
    gens = [u1 * 2, u2 * 2, 1 + u1 ** 2 + u2 ** 2 - v * w]
    pt = (fld.zero, fld.zero, fld.one, fld.one)
    assert all(g.evaluate(pt) == fld.zero for g in gens)
    res = groebner_membership_one(gens)
    assert res.status == "not_in_ideal"


def test_first_blowup_chart_jacobian_has_certificate():
    # the intended object behind the spec's example: the full Jacobian ideal
    # of the first blow-up x-chart, v^p x^(p-2) = 1 + u1^2 + u2^2, p >= 3
    for p in (3, 5):
        fld = FF(p)
        v, u1, u2, x = MultiPoly.variables(fld, 4)
        eq = v ** p * x ** (p - 2) - 1 - u1 ** 2 - u2 ** 2
        gens = [eq] + eq.gradient()
        res = groebner_membership_one(gens)
        assert res.status == "certificate"
        assert res.certificate.verify()


def test_certificate_reverifies_independently_of_engine():
    # V(x^2, xy - 1) is empty: x = 0 forces xy = 0 != 1
    fld = FF(7)
    x, y = MultiPoly.variables(fld, 2)
    res = groebner_membership_one([x ** 2, x * y - 1])
    assert res.status == "certificate"
    cert = res.certificate
    assert cert.verify()
    # tampering with a cofactor must break re-verification
    cert.cofactors[0] = cert.cofactors[0] + 1
    assert not cert.verify()


def test_exhaustion_reported_distinctly():
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    res = groebner_membership_one([x ** 2, x * y - 1], max_pairs=0)
    assert res.status == "exhausted"
    assert res.status not in ("certificate", "not_in_ideal")


def test_reduce_poly_identity():
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    basis = [x ** 2 - y, y ** 2 - 1]
    rng = random.Random(0)
    for _ in range(20):
        terms = {}
        for _ in range(5):
            e = (rng.randrange(5), rng.randrange(5))
            c = rng.randrange(1, 5)
            terms[e] = fld.elem(c)
        f = MultiPoly(fld, 2, terms)
        qs, rem = reduce_poly(f, basis)
        acc = rem
        for q, b in zip(qs, basis):
            acc = acc + q * b
        assert acc == f


def test_buchberger_spolys_reduce_to_zero():
    # completed bases pass the Buchberger criterion (spot check)
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    status, entries, _ = buchberger([x ** 2 + y, x * y + 1])
    assert status == "done"
    basis = [e[0] for e in entries]
    # representation tracking: every entry equals its stated combination
    gens = [x ** 2 + y, x * y + 1]
    for poly, rep in entries:
        acc = MultiPoly(fld, 2)
        for c, g in zip(rep, gens):
            acc = acc + c * g
        assert acc == poly


def test_zero_dimensional_count_matches_solutions():
    # V(x^2 - 1, y - x): two simple solutions over F_7
    fld = FF(7)
    x, y = MultiPoly.variables(fld, 2)
    res = groebner_membership_one([x ** 2 - 1, y - x])
    assert res.status == "not_in_ideal"
    assert standard_monomial_count(res.basis) == 2


def test_not_zero_dimensional_returns_none():
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    res = groebner_membership_one([x * y])
    assert standard_monomial_count(res.basis) is None
