"""Core arithmetic: power products, term orders, polynomials, module vectors,
division, and inter-reduction."""

import random
from fractions import Fraction
from itertools import permutations

import pytest

from siggb import (ContextError, ModInt, ModuleMonomial, PrimeField, QQ, Ring,
                   divide, interreduce, mono_div, mono_divides, mono_lcm,
                   mono_mul, normal_form, parse_poly)
from conftest import REDUCED_GB4, mono_of


# -- power products ---------------------------------------------------------

def test_mono_mul(ring4):
    r = ring4
    assert mono_mul(mono_of("x^2*y", r), mono_of("z", r)) == mono_of("x^2*y*z", r)
    assert mono_mul(mono_of("1", r), (3, 1, 0, 2)) == (3, 1, 0, 2)
    assert mono_mul(mono_of("x*y", r), mono_of("x*z^2", r)) == mono_of("x^2*y*z^2", r)


def test_mono_mul_length_mismatch():
    with pytest.raises(ContextError):
        mono_mul((1, 0), (1, 0, 0))


def test_mono_divides_div_lcm(ring4):
    r = ring4
    assert mono_lcm(mono_of("x^2*y", r), mono_of("x*z^2", r)) == mono_of("x^2*y*z^2", r)
    assert mono_divides(mono_of("x^2*y", r), mono_of("x^2*y*z^2", r))
    assert mono_div(mono_of("x^2*y*z^2", r), mono_of("x^2*y", r)) == mono_of("z^2", r)
    assert not mono_divides(mono_of("y*z^3", r), mono_of("x*y^3*t", r))
    with pytest.raises(ContextError):
        mono_div(mono_of("x", r), mono_of("y", r))


# -- term orders ------------------------------------------------------------

def naive_lex_cmp(a, b):
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def naive_grlex_cmp(a, b):
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    return naive_lex_cmp(a, b)


def naive_grevlex_cmp(a, b):
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            # smaller trailing exponent means the larger monomial
            return 1 if x < y else -1
    return 0


NAIVE = {"lex": naive_lex_cmp, "grlex": naive_grlex_cmp, "grevlex": naive_grevlex_cmp}


def test_ring_cmp_examples(ring4):
    r = ring4
    assert r.mono_cmp(mono_of("x^2*y", r), mono_of("x*z^2", r)) == 1
    assert r.mono_cmp(mono_of("1", r), mono_of("x", r)) == -1
    assert r.mono_cmp(mono_of("x^2*y*z^2", r), mono_of("z^4*t", r)) == 1
    # the lead of the zero polynomial sits below every power product
    assert r.mono_key(None) < r.mono_key(mono_of("1", r))


@pytest.mark.parametrize("order", ["lex", "grlex", "grevlex"])
def test_ring_cmp_against_naive_comparator(order):
    ring = Ring(("x", "y", "z", "t"), order)
    rng = random.Random(2024)
    for _ in range(400):
        a = tuple(rng.randrange(0, 5) for _ in range(4))
        b = tuple(rng.randrange(0, 5) for _ in range(4))
        assert ring.mono_cmp(a, b) == NAIVE[order](a, b)


@pytest.mark.parametrize("order", ["lex", "grlex", "grevlex"])
def test_term_order_axioms(order):
    ring = Ring(("x", "y", "z"), order)
    rng = random.Random(11)
    one = ring.one_mono()
    for _ in range(300):
        a = tuple(rng.randrange(0, 4) for _ in range(3))
        b = tuple(rng.randrange(0, 4) for _ in range(3))
        t = tuple(rng.randrange(0, 4) for _ in range(3))
        c = ring.mono_cmp(a, b)
        # totality: exactly one of <, ==, > holds
        assert c in (-1, 0, 1)
        assert (c == 0) == (a == b)
        # multiplicativity
        assert ring.mono_cmp(mono_mul(t, a), mono_mul(t, b)) == c
        # well order: 1 is the least element
        assert ring.mono_cmp(one, a) <= 0


def test_module_cmp_pot(ring4):
    r = ring4
    e = lambda m, j: ModuleMonomial(mono_of(m, r), j)
    assert r.module_cmp(e("z^2", 3), e("x*y", 2)) == -1
    assert r.module_cmp(e("x", 1), e("x^100", 2)) == 1
    assert r.module_cmp(e("x", 1), e("1", 1)) == 1
    assert r.module_cmp(e("x", 1), e("x", 1)) == 0


# -- polynomials ------------------------------------------------------------

def test_poly_add_cancellation(ring4):
    f = parse_poly("x*z^2 - y^2*t", ring4)
    g = parse_poly("y^2*t", ring4)
    assert str(f + g) == "x*z^2"
    assert (f - f).is_zero()
    assert ring4.zero() + f == f


def test_poly_scale_mono(ring4):
    f2 = parse_poly("x*z^2 - y^2*t", ring4)
    assert f2.mul_term(-1, mono_of("x*y", ring4)) == parse_poly(
        "-x^2*y*z^2 + x*y^3*t", ring4)
    with pytest.raises(ContextError):
        f2.mul_term(0, ring4.one_mono())


def test_lm_is_lc_times_lpp(ring4):
    rng = random.Random(5)
    for _ in range(100):
        terms = {tuple(rng.randrange(0, 4) for _ in range(4)):
                 rng.randrange(-5, 6) for _ in range(rng.randrange(1, 6))}
        f = ring4.poly(terms)
        g = ring4.poly({tuple(rng.randrange(0, 4) for _ in range(4)): 1})
        for h in (f, f + g, f - g, f * g if f and g else f):
            if h:
                c, m = h.lm()
                assert c == h.lc() and m == h.lpp()
                # canonical form: strictly decreasing terms, no zero coeffs
                keys = [ring4.mono_key(mm) for mm, _ in h.terms]
                assert keys == sorted(keys, reverse=True)
                assert all(cc for _, cc in h.terms)


def test_prime_field_arithmetic():
    Fp = PrimeField(32003)
    a, b = Fp(12345), Fp(-7)
    assert a * b / b == a
    assert Fp(Fraction(3, 2)) * Fp(2) == Fp(3)
    assert not Fp(0)
    with pytest.raises(ContextError):
        PrimeField(32004)
    with pytest.raises(ContextError):
        ModInt(1, 5) + ModInt(1, 7)


# -- normal form ------------------------------------------------------------

def test_normal_form_section4_nonmember(ring4, F4):
    gb = [parse_poly(s, ring4) for s in REDUCED_GB4]
    f = parse_poly("x*z^6*t - x^5*z*t^2 + x", ring4)
    assert str(normal_form(f, gb)) == "x"


def test_normal_form_zero_and_one_step(ring4):
    g3 = parse_poly("x^2*y - z^2*t", ring4)
    assert normal_form(ring4.zero(), [g3]).is_zero()
    h = parse_poly("x^2*y*z^2 - z^4*t", ring4)
    assert normal_form(h, [g3]).is_zero()


def test_divide_is_exact_and_remainder_irreducible(ring4):
    rng = random.Random(77)
    gens = [parse_poly(s, ring4) for s in REDUCED_GB4[:4]]
    for _ in range(50):
        f = ring4.poly({tuple(rng.randrange(0, 5) for _ in range(4)):
                        rng.randrange(-4, 5) for _ in range(5)})
        quots, rem = divide(f, gens)
        total = rem
        for q, g in zip(quots, gens):
            if q:
                total = total + q * g
        assert total == f
        for m, _ in rem.terms:
            assert not any(mono_divides(g.lpp(), m) for g in gens)


# -- module vectors ---------------------------------------------------------

def test_modvec_dot_example(ring22):
    r = ring22
    F = tuple(parse_poly(s, r) for s in ("y*z - x", "x*z - y", "x*y - z"))
    u = r.vector([r.zero(), parse_poly("-y", r), parse_poly("z", r)])
    assert u.dot(F) == parse_poly("y^2 - z^2", r)
    e2 = r.unit_vector(2, 3)
    assert e2.dot(F) == F[1]


def test_modvec_lpp_example(ring22):
    r = ring22
    u = r.vector([r.zero(), parse_poly("2*x", r), parse_poly("-y", r)])
    c, mm = u.lm()
    assert mm == ModuleMonomial(mono_of("x", r), 2)
    assert c == 2


def test_modvec_bilinearity(ring22):
    r = ring22
    rng = random.Random(9)

    def rand_poly():
        return r.poly({tuple(rng.randrange(0, 3) for _ in range(3)):
                       rng.randrange(-3, 4) for _ in range(3)})

    F = [rand_poly() or r.var("x") for _ in range(3)]
    for _ in range(30):
        u = r.vector([rand_poly() for _ in range(3)])
        v = r.vector([rand_poly() for _ in range(3)])
        assert (u + v).dot(F) == u.dot(F) + v.dot(F)
        t = tuple(rng.randrange(0, 3) for _ in range(3))
        assert u.mul_term(5, t).dot(F) == u.dot(F).mul_term(5, t)


# -- interreduce ------------------------------------------------------------

def test_interreduce_section4(ring4, fixture_S):
    red = interreduce([el.poly for el in fixture_S.elements])
    assert sorted(str(g) for g in red) == sorted(REDUCED_GB4)


def test_interreduce_trivialities(ring4):
    x = ring4.var("x")
    assert interreduce([x, x.scale(2)]) == [x]
    red = [parse_poly(s, ring4) for s in REDUCED_GB4]
    assert interreduce(interreduce(red)) == interreduce(red)


def test_interreduce_order_independent(ring4, fixture_S):
    polys = [el.poly for el in fixture_S.elements]
    rng = random.Random(3)
    base = interreduce(polys)
    for _ in range(10):
        shuffled = polys[:]
        rng.shuffle(shuffled)
        assert interreduce(shuffled) == base
