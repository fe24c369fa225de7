"""Jet truncation and composition against naive substitute-then-truncate."""

import random

import pytest

from charpgeom.algebra.finitefield import FF
from charpgeom.algebra.multipoly import MultiPoly
from charpgeom.algebra.jets import Jet, jet_compose


def rand_mpoly(fld, n, rng, max_deg=4, max_terms=6, no_const=False):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        e = tuple(rng.randrange(0, max_deg) for _ in range(n))
        if no_const and sum(e) == 0:
            continue
        c = rng.randrange(fld.order)
        if c:
            terms[e] = fld.from_index(c)
    return MultiPoly(fld, n, terms)


def naive_compose(f, phi_polys, order):
    # oracle: full polynomial substitution, then truncation
    full = f.subs(phi_polys)
    return Jet.from_poly(full, order)


def test_identity_plus_perturbation():
    # f = x, phi = (x + y^2), r = 3 -> x + y^2
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    phi = [Jet.from_poly(x + y ** 2, 3), Jet.variable(fld, 2, 1, 3)]
    res = jet_compose(x, phi, 3)
    assert res == Jet.from_poly(x + y ** 2, 3)


def test_square_composition_drops_high_degree():
    # f = x^2, phi = (x + y^2), r = 4 -> x^2 + 2xy^2 (y^4 dropped)
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    phi = [Jet.from_poly(x + y ** 2, 4), Jet.variable(fld, 2, 1, 4)]
    res = jet_compose(x ** 2, phi, 4)
    assert res == Jet.from_poly(x ** 2 + x * y ** 2 * 2, 4)
    # sanity against the naive oracle
    assert res == naive_compose(x ** 2, [x + y ** 2, y], 4)


def test_identity_substitution_truncates():
    fld = FF(7)
    rng = random.Random(1)
    f = rand_mpoly(fld, 2, rng, max_deg=6)
    ident = [Jet.variable(fld, 2, i, 4) for i in range(2)]
    assert jet_compose(f, ident, 4) == Jet.from_poly(f, 4)


def test_all_stored_degrees_below_order():
    fld = FF(3)
    rng = random.Random(2)
    f = rand_mpoly(fld, 3, rng, max_deg=5)
    jet = Jet.from_poly(f, 4)
    assert all(sum(e) < 4 for e in jet.to_poly().terms)


def test_composition_depends_only_on_truncations():
    # trunc(f o g, r) is unchanged by altering g above degree r
    fld = FF(5)
    rng = random.Random(3)
    x, y = MultiPoly.variables(fld, 2)
    for _ in range(20):
        f = rand_mpoly(fld, 2, rng, max_deg=4)
        g1 = rand_mpoly(fld, 2, rng, max_deg=3, no_const=True)
        tail = rand_mpoly(fld, 2, rng, max_deg=3) * x ** 3 * y ** 3  # degree >= 6
        r = 5
        a = jet_compose(f, [Jet.from_poly(g1, r), Jet.variable(fld, 2, 1, r)], r)
        b = jet_compose(f, [Jet.from_poly(g1 + tail, r),
                            Jet.variable(fld, 2, 1, r)], r)
        assert a == b


def test_composition_matches_naive_oracle_random():
    for p in (3, 5):
        fld = FF(p)
        rng = random.Random(p)
        for _ in range(25):
            r = rng.randrange(3, 7)
            f = rand_mpoly(fld, 2, rng, max_deg=r)
            g1 = rand_mpoly(fld, 2, rng, max_deg=r - 1, no_const=True)
            g2 = rand_mpoly(fld, 2, rng, max_deg=r - 1, no_const=True)
            if g1.constant_term() != fld.zero or g2.constant_term() != fld.zero:
                continue
            phis = [Jet.from_poly(g1, r), Jet.from_poly(g2, r)]
            assert jet_compose(f, phis, r) == naive_compose(f, [g1, g2], r)


def test_associativity_up_to_truncation():
    # trunc((f o g) o h, r) = trunc(f o (g o h), r) on zero-constant triples
    fld = FF(7)
    rng = random.Random(9)
    for _ in range(25):
        r = rng.randrange(3, 6)
        f = rand_mpoly(fld, 2, rng, max_deg=r)
        gs = []
        for _ in range(2):
            g = rand_mpoly(fld, 2, rng, max_deg=r - 1, no_const=True)
            g.terms.pop((0, 0), None)
            gs.append(g)
        hs = []
        for _ in range(2):
            h = rand_mpoly(fld, 2, rng, max_deg=r - 1, no_const=True)
            h.terms.pop((0, 0), None)
            hs.append(h)
        g_jets = [Jet.from_poly(g, r) for g in gs]
        h_jets = [Jet.from_poly(h, r) for h in hs]
        fg = jet_compose(f, g_jets, r)
        left = jet_compose(fg, h_jets, r)
        gh = [jet_compose(g, h_jets, r) for g in gs]
        right = jet_compose(f, gh, r)
        assert left == right


def test_constant_term_violation_rejected():
    fld = FF(5)
    x, y = MultiPoly.variables(fld, 2)
    bad = Jet.from_poly(x + 1, 4)
    with pytest.raises(ValueError):
        jet_compose(x, [bad, Jet.variable(fld, 2, 1, 4)], 4)


def test_jet_arithmetic_over_extension_field():
    fld = FF(3, 2)
    g = fld.generator()
    x, y = MultiPoly.variables(fld, 2)
    a = Jet.from_poly(x * MultiPoly.const(fld, 2, g) + y ** 2, 5)
    b = Jet.from_poly(y * 2, 5)
    assert (a + b) - b == a
    assert (a * b).to_poly() == ((x * MultiPoly.const(fld, 2, g) + y ** 2) * (y * 2))
