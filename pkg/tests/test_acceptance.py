"""Acceptance suite: every criterion at its stated tolerance (exact
arithmetic throughout; tolerances are zero), one PASS line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import itertools
import random
import time
from fractions import Fraction

from charpgeom.algebra.finitefield import FF
from charpgeom.algebra.unipoly import UPoly, RatFunc, RatFuncField
from charpgeom.algebra.multipoly import MultiPoly, det
from charpgeom import heights, covers, normalform, desing, picard
from charpgeom.cli import run_scenario


def _report(num, name, detail=""):
    print(f"\nACCEPTANCE {num} ({name}): PASS {detail}")


def test_acceptance_1_desingularization():
    t0 = time.monotonic()
    for p in (3, 5, 7, 11, 13):
        for n in (2, 3, 4):
            rep = desing.desingularize(p, n)
            assert rep.num_blowups == (p - 1) // 2
            for k, charts in enumerate(rep.steps):
                zc = charts[0]
                # z-chart equation is z^(p-2k) = sum w^2 after k+1 steps
                fld = zc.strict.domain
                expected = MultiPoly.var(fld, n + 1, 0, p - 2 * (k + 1))
                for i in range(1, n + 1):
                    expected = expected - MultiPoly.var(fld, n + 1, i, 2)
                assert zc.strict == expected
                assert zc.multiplicity == 2
                for ch in charts:
                    if ch.certificate_status == "smooth":
                        assert ch.smooth_certificate.verify()
                    else:
                        assert ch.certificate_status.startswith(
                            "singular center")
            ledger = desing.pullback_ledger(rep)
            assert all(c["ok"] and c["multiplicity"] == 2
                       for c in ledger["per_chart"])
    elapsed = time.monotonic() - t0
    assert elapsed < 60, f"desingularization grid took {elapsed:.1f}s"
    _report(1, "desingularization",
            f"p in {{3,5,7,11,13}} x n in {{2,3,4}}, {elapsed:.1f}s < 60s")


def _random_nondeg(fld, n, r, rng):
    half = fld.elem(2).inverse()
    while True:
        mat = [[fld.from_index(rng.randrange(fld.order)) for _ in range(n)]
               for _ in range(n)]
        for i in range(n):
            for j in range(i):
                mat[i][j] = mat[j][i]
        if det(mat, fld):
            break
    f = MultiPoly(fld, n)
    for i in range(n):
        e = [0] * n
        e[i] = 2
        f = f + MultiPoly.monomial(fld, n, tuple(e), mat[i][i] * half)
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = 1
            e[j] = 1
            f = f + MultiPoly.monomial(fld, n, tuple(e), mat[i][j])
    for _ in range(rng.randrange(2, 12)):
        exps = tuple(rng.randrange(0, r) for _ in range(n))
        if 2 < sum(exps) < r:
            f = f + MultiPoly.monomial(fld, n, exps, rng.randrange(1, fld.p))
    return f


def test_acceptance_2_normal_form():
    t0 = time.monotonic()
    rng = random.Random(20240)
    configs = list(itertools.product((3, 5, 7), (2, 3)))
    failures = 0
    trials = 0
    while trials < 100:
        p, n = configs[trials % len(configs)]
        r = rng.randrange(4, 9)       # r <= 8
        fld = FF(p)
        f = _random_nondeg(fld, n, r, rng)
        res = normalform.normal_form(f, r)
        work = f if res.extension_degree == 1 else f.map_coefficients(
            res.fld, res.embed)
        # independent jet recomposition of f - a0 through the returned change
        ok = res.verify(work) and res.certificate == res.target
        if not ok:
            failures += 1
        trials += 1
    elapsed = time.monotonic() - t0
    assert failures == 0
    assert elapsed < 120, f"normal-form run took {elapsed:.1f}s"
    _report(2, "normal form",
            f"100 seeded trials, 0 failures, {elapsed:.1f}s < 120s")


def test_acceptance_3_heights_northcott():
    for q in (3, 5):
        fld = FF(q)
        fam = heights.example1_constant_points(2, fld, density_degree=2)
        assert len(fam.points) == q * q + q + 1
        assert all(h == 0 for h in fam.heights)
        assert fam.verify()
        verdict = fam.extras["density"]
        assert verdict.dense and verdict.rank == verdict.n_monomials == 6
    # Example 3: y^2 = x^3 + t over F_5, sampled at every constant x0
    fld = FF(5)
    t = UPoly.x(fld)
    g = [RatFunc(t), RatFunc(UPoly(fld)), RatFunc(UPoly(fld)),
         RatFunc(UPoly.const(fld, 1))]
    fam3 = heights.example3_bounded_degree(g, list(fld.elements()))
    recs = fam3.extras["records"]
    assert len(recs) >= fld.order
    assert all(r.degree_over_K <= 2 for r in recs)
    bound = fam3.extras["height_bound"]
    assert all(r.height_exact <= bound for r in recs)
    d_values = {r.d_L for r in recs if r.degree_over_K == 2}
    assert len(d_values) == 1           # constant Hurwitz discriminant bound
    _report(3, "heights/Northcott failure",
            f"example1 q in {{3,5}} rank 6/6; example3 {len(recs)} points, "
            f"bound {bound}, d_L constant {d_values.pop()}")


def test_acceptance_4_frobenius_factorization():
    rng = random.Random(777)
    failures = 0
    trials = 0
    while trials < 100:
        p = (3, 5)[trials % 2]
        fld = FF(p)
        tdom = RatFuncField(fld, "t")
        nvars = rng.randrange(1, 4)
        terms = {}
        for _ in range(rng.randrange(1, 9)):
            e = tuple(rng.randrange(0, 7) for _ in range(nvars))
            if sum(e) > 6:
                continue
            num = UPoly(fld, [fld.from_index(rng.randrange(fld.order))
                              for _ in range(rng.randrange(1, 4))])
            if num.is_zero():
                continue
            den = UPoly(fld, [fld.from_index(rng.randrange(fld.order))
                              for _ in range(rng.randrange(0, 2))] + [fld.one])
            terms[e] = RatFunc(num, den)
        if not terms:
            continue
        h = MultiPoly(tdom, nvars, terms)
        fact = covers.frobenius_factorization(h)
        if not fact.verify():
            failures += 1
        trials += 1
    assert failures == 0
    _report(4, "Frobenius factorization",
            "100 seeded certificates re-verified by expansion, 0 failures")


def test_acceptance_5_adjunction_grid():
    checked = 0
    for p in (3, 5):
        for d in (1, 2):
            for n in range(1, 6):
                for k in range(5):
                    direct = picard.adjunction_class(p, d, n, k)
                    summed = (picard.canonical_of_ambient(p, d, n, k)
                              + picard.strict_transform_of_cover(p, d, n, k))
                    assert direct == summed
                    assert direct.exc == (0,) * k
                    checked += 1
    assert checked == 100
    _report(5, "adjunction", "two expansions agree on all 100 grid points, "
                             "exceptional coefficient 0")


def test_acceptance_6_vojta_violation():
    rep = run_scenario("vojta-demo", {"p": 3, "d": 1, "n": 5, "M": 10},
                       seed=0)
    assert rep.passed, rep.to_text()
    table = rep.outputs["family"]
    assert len(table) == 10
    assert all(row["d"] == "-2" for row in table)
    hs = [row["canonical_height"] for row in table]
    assert all(hs[i] < hs[i + 1] for i in range(9))
    pairs = {(v["A"], v["c"]) for v in rep.outputs["violations"]}
    for a_val in (1, 2, 5):
        for c_val in (0, 10):
            assert (a_val, c_val) in pairs
            v = next(v for v in rep.outputs["violations"]
                     if (v["A"], v["c"]) == (a_val, c_val))
            assert v["height"] > Fraction(v["bound"])
    _report(6, "Vojta violation",
            f"heights {hs[0]}..{hs[-1]} strictly increasing, d = -2, "
            f"violations for all (A,c) in {{1,2,5}}x{{0,10}}")


def test_acceptance_7_isotriviality_witnesses():
    fld = FF(5)
    t = UPoly.x(fld)
    j0, iso0 = picard.j_invariant(RatFunc(UPoly(fld)), RatFunc(t))
    assert j0.is_zero() and iso0
    j1, iso1 = picard.j_invariant(RatFunc(t), RatFunc(UPoly.const(fld, 1)))
    assert not iso1
    # equivalence-relation suite on 50 seeded random configuration triples
    f7 = FF(7)
    rng = random.Random(4242)
    from tests_support_pgl import random_config, random_pgl, apply_pgl
    for _ in range(50):
        n_dim = rng.choice([1, 2])
        cfg_a = random_config(f7, n_dim + 3, rng, N=n_dim)
        m1 = random_pgl(f7, n_dim, rng)
        m2 = random_pgl(f7, n_dim, rng)
        cfg_b = apply_pgl(f7, m1, cfg_a)
        cfg_c = apply_pgl(f7, m2, cfg_b)
        assert picard.pgl_equivalence(cfg_a, cfg_a).equivalent
        ab = picard.pgl_equivalence(cfg_a, cfg_b)
        ba = picard.pgl_equivalence(cfg_b, cfg_a)
        ac = picard.pgl_equivalence(cfg_a, cfg_c)
        assert ab.equivalent and ba.equivalent and ac.equivalent
    # cross-ratio mismatch detection
    a = picard.PointConfig(f7, [(0, 1), (1, 1), (1, 0), (2, 1)])
    b = picard.PointConfig(f7, [(0, 1), (1, 1), (1, 0), (3, 1)])
    assert not picard.pgl_equivalence(a, b).equivalent
    _report(7, "isotriviality witnesses",
            "j(x^3 + t z^3) = 0 isotrivial; a = t non-isotrivial; "
            "50 triple equivalence checks; cross-ratio mismatch detected")


def _sylvester_resultant_deg2_deg1(fld, p2, p1, p0, q1, q0):
    mat = [[p2, p1, p0],
           [q1, q0, fld.zero],
           [fld.zero, q1, q0]]
    return det(mat, fld)


def test_acceptance_8_genericity():
    fld = FF(7)
    # exhaustive census of monic cubics: pipeline classification vs the
    # independent Res(f', f'') oracle, item by item and in total
    oracle_bad = set()
    for a, b, c in itertools.product(range(7), repeat=3):
        ea, eb = fld.elem(a), fld.elem(b)
        res = _sylvester_resultant_deg2_deg1(
            fld, fld.elem(3), ea * 2, eb, fld.elem(6), ea * 2)
        if res == fld.zero:
            oracle_bad.add((c, b, a))    # census coefficient order (low->high)
    good, bad, bad_list = covers.monic_univariate_census(fld, 3, 3)
    assert good + bad == 343
    assert set(bad_list) == oracle_bad
    assert bad == len(oracle_bad) == 49      # fraction exactly 1/7
    assert Fraction(good, 343) >= 1 - Fraction(3, 7)
    # seeded sampled fractions >= 90% for small parameter sets; the bad
    # locus of the gradient+Hessian criterion empirically has codimension 1
    # in the section space, so the fields are sized to leave real margin
    rep1 = covers.genericity_sample(1, 1, 1, 3, FF(41), trials=40, seed=11)
    assert rep1.unknown == 0 and rep1.fraction >= 0.9, rep1.fraction
    rep2 = covers.genericity_sample(2, 1, 1, 3, FF(101), trials=40, seed=11)
    assert rep2.unknown == 0 and rep2.fraction >= 0.9, rep2.fraction
    _report(8, "genericity",
            f"census 294/49 of 343 matches the resultant oracle exactly; "
            f"sampled fractions {rep1.fraction:.3f}, {rep2.fraction:.3f} >= 0.9")
