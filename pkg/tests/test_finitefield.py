"""Finite field arithmetic: axioms, Frobenius roots, square roots, towers."""

import random

import pytest

from charpgeom.algebra.finitefield import FF, FiniteField, pth_root


SMALL_FIELDS = [(3, 1), (3, 2), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2),
                (11, 1), (13, 1), (13, 2)]


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_random(p, m):
    fld = FF(p, m)
    rng = random.Random(p * 100 + m)
    for _ in range(50):
        a = fld.from_index(rng.randrange(fld.order))
        b = fld.from_index(rng.randrange(fld.order))
        c = fld.from_index(rng.randrange(fld.order))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + fld.zero == a
        assert a * fld.one == a
        assert a - a == fld.zero
        if a != fld.zero:
            assert a * a.inverse() == fld.one


def test_p2_rejected():
    with pytest.raises(ValueError):
        FiniteField(2)
    with pytest.raises(ValueError):
        FiniteField(9)   # not prime


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_pth_root_exhaustive_or_random(p, m):
    # exhaustive for p^m <= 81, randomized beyond
    fld = FF(p, m)
    if fld.order <= 81:
        sample = list(fld.elements())
    else:
        rng = random.Random(1)
        sample = [fld.from_index(rng.randrange(fld.order)) for _ in range(60)]
    for a in sample:
        assert pth_root(a) ** p == a


def test_pth_root_prime_field_is_identity():
    fld = FF(7)
    for a in fld.elements():
        assert pth_root(a) == a


def test_pth_root_f9_is_cube():
    fld = FF(3, 2)
    for a in fld.elements():
        r = pth_root(a)
        assert r == a ** 3
        assert r ** 3 == a
    assert pth_root(fld.zero) == fld.zero
    assert pth_root(fld.one) == fld.one


def test_frobenius_is_field_automorphism():
    fld = FF(5, 2)
    rng = random.Random(3)
    for _ in range(40):
        a = fld.from_index(rng.randrange(fld.order))
        b = fld.from_index(rng.randrange(fld.order))
        assert (a + b) ** 5 == a ** 5 + b ** 5
        assert (a * b) ** 5 == a ** 5 * b ** 5
    # x^(p^m) = x
    for a in fld.elements():
        assert a ** 25 == a


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1),
                                 (13, 1), (13, 2)])
def test_sqrt_exhaustive(p, m):
    fld = FF(p, m)
    n_residues = 0
    for a in fld.elements():
        r = fld.sqrt(a)
        if r is None:
            assert not fld.is_square(a)
        else:
            assert r * r == a
            n_residues += 1
    # 0 plus (q-1)/2 nonzero squares
    assert n_residues == (fld.order - 1) // 2 + 1


def test_generator_order():
    for (p, m) in [(3, 2), (5, 1), (7, 1), (5, 2)]:
        fld = FF(p, m)
        g = fld.generator()
        seen = set()
        x = fld.one
        for _ in range(fld.order - 1):
            x = x * g
            seen.add(x.coeffs)
        assert len(seen) == fld.order - 1


def test_extension_embedding_is_homomorphism():
    for (p, m) in [(3, 1), (5, 1), (3, 2), (5, 2)]:
        fld = FF(p, m)
        big, embed = fld.extension(2)
        assert big.order == fld.order ** 2
        rng = random.Random(p + m)
        for _ in range(30):
            a = fld.from_index(rng.randrange(fld.order))
            b = fld.from_index(rng.randrange(fld.order))
            assert embed(a + b) == embed(a) + embed(b)
            assert embed(a * b) == embed(a) * embed(b)
        assert embed(fld.one) == big.one
        assert embed(fld.zero) == big.zero


def test_every_base_element_square_in_quadratic_extension():
    fld = FF(7)
    big, embed = fld.extension(2)
    for a in fld.elements():
        assert big.sqrt(embed(a)) is not None


def test_text_encoding_round_trip():
    fld = FF(5, 2)
    for a in fld.elements():
        text = fld.format_element(a)
        assert fld.parse_element(text) == a
    assert FF(7).format_element(FF(7).elem(4)) == "4"
