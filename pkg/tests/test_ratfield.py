"""Exact arithmetic in C(s), root finding, poles, and pole-based spectra."""

import json
import math
import random
from fractions import Fraction

import pytest

from algspec.ratfield import (CPoly, Qi, RatFunc, alg_deriv,
                              clean_frequencies, partial_fractions, poles,
                              poly_gcd, poly_roots, reduce, snap_axes,
                              spectrum_of_rational, square_free_factors)


def _rand_qi(rng, span=4):
    return Qi(Fraction(rng.randint(-span, span), rng.randint(1, 3)),
              Fraction(rng.randint(-span, span), rng.randint(1, 3)))


def _rand_poly(rng, max_deg=3, span=4):
    return CPoly([_rand_qi(rng, span) for _ in range(rng.randint(0, max_deg) + 1)])


def _rand_nonzero_poly(rng, max_deg=3, span=4):
    while True:
        p = _rand_poly(rng, max_deg, span)
        if not p.is_zero:
            return p


def _rand_ratfunc(rng, max_deg=3):
    return RatFunc(_rand_poly(rng, max_deg), _rand_nonzero_poly(rng, max_deg))


# --- scalars ----------------------------------------------------------------


def test_qi_field_axioms():
    rng = random.Random(2101)
    for _ in range(200):
        a, b, c = (_rand_qi(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if b:
            assert (a / b) * b == a


def test_qi_conjugate_and_powers():
    z = Qi(Fraction(1, 2), Fraction(-3, 4))
    assert z.conjugate() == Qi(Fraction(1, 2), Fraction(3, 4))
    assert (z * z.conjugate()).is_real
    assert Qi(0, 1) ** 2 == Qi(-1)
    assert Qi(2) ** -1 == Qi(Fraction(1, 2))
    assert Qi(0, 1) ** -1 == Qi(0, -1)


def test_qi_display():
    assert str(Qi(3)) == "3"
    assert str(Qi(Fraction(-1, 2))) == "-1/2"
    assert str(Qi(0, 1)) == "i"
    assert str(Qi(0, 2)) == "2i"
    assert str(Qi(1, 2)) == "(1+2i)"


# --- polynomials ------------------------------------------------------------


def test_cpoly_divmod_is_exact():
    rng = random.Random(2102)
    for _ in range(100):
        a = _rand_poly(rng, 5)
        b = _rand_nonzero_poly(rng, 3)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_poly_gcd_examples():
    s = CPoly([0, 1])
    one = CPoly([1])
    assert poly_gcd((s - one) * (s + one), s - one) == (s - one).monic()
    assert poly_gcd(CPoly([0, 2]), CPoly([2])) == CPoly([1])


def test_square_free_factors_recover_multiplicities():
    rng = random.Random(2103)
    s = CPoly([0, 1])
    for _ in range(30):
        roots = {}
        for _ in range(rng.randint(1, 3)):
            roots[Qi(rng.randint(-3, 3), rng.randint(-3, 3))] = rng.randint(1, 3)
        p = CPoly([1])
        for root, mult in roots.items():
            p = p * (s - CPoly.scalar(root)) ** mult
        expanded = CPoly([1])
        for factor, mult in square_free_factors(p):
            expanded = expanded * factor ** mult
        assert expanded.monic() == p.monic()


# --- rational functions -----------------------------------------------------


def test_partial_sum_of_simple_fractions():
    s = CPoly([0, 1])
    one = CPoly([1])
    left = RatFunc(one, s - one) + RatFunc(one, s + one)
    assert left == RatFunc(CPoly([0, 2]), CPoly([-1, 0, 1]))


def test_product_cancels_common_factor():
    r = RatFunc(CPoly([0, 1]), CPoly([1, 0, 1])) * RatFunc(CPoly([1, 0, 1]))
    assert r == RatFunc.S


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc.ONE / RatFunc.ZERO
    with pytest.raises(ZeroDivisionError):
        RatFunc(CPoly.ONE, CPoly.ZERO)


def test_reduce_examples():
    assert reduce(CPoly([-1, 0, 1]), CPoly([-1, 1])) == RatFunc(CPoly([1, 1]))
    assert reduce(CPoly([0, 2]), CPoly([2])) == RatFunc.S
    p = CPoly([9, 0, 1])
    assert reduce(p, p) == RatFunc.ONE


def test_reduced_form_is_canonical():
    rng = random.Random(2104)
    for _ in range(100):
        r = _rand_ratfunc(rng)
        if r.is_zero:
            assert r.num == CPoly.ZERO and r.den == CPoly.ONE
            continue
        assert r.den.leading() == Qi(1)
        assert poly_gcd(r.num, r.den).degree == 0
        extra = _rand_nonzero_poly(rng, 2)
        assert RatFunc(r.num * extra, r.den * extra) == r


def test_field_axioms_random():
    rng = random.Random(2105)
    for _ in range(60):
        a, b, c = (_rand_ratfunc(rng, 2) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if not b.is_zero:
            assert (a / b) * b == a


# --- roots and poles ----------------------------------------------------------


def test_poles_conjugate_pair():
    ps = poles(RatFunc(CPoly([3]), CPoly([9, 0, 1])))
    assert len(ps) == 2
    assert abs(ps[0].location - (-3j)) <= 1e-9
    assert abs(ps[1].location - 3j) <= 1e-9
    assert [p.multiplicity for p in ps] == [1, 1]


def test_pole_multiplicity_from_repeated_factor():
    s = CPoly([0, 1])
    two = CPoly.scalar(Qi(2))
    ps = poles(RatFunc(CPoly.ONE, (s - two) ** 3))
    assert len(ps) == 1
    assert abs(ps[0].location - 2) <= 1e-9
    assert ps[0].multiplicity == 3


def test_poles_of_mixed_real_complex_product():
    s = CPoly([0, 1])
    den = (s - CPoly.scalar(Qi(1))) * (s - CPoly.scalar(Qi(1, 5)))
    r = RatFunc(CPoly.ONE, den)
    ps = poles(r)
    assert len(ps) == 2
    locs = sorted((p.location for p in ps),
                  key=lambda z: (round(z.real, 6), z.imag))
    assert abs(locs[0] - 1) <= 1e-9
    assert abs(locs[1] - (1 + 5j)) <= 1e-9
    # the found roots really are roots of the denominator
    for p in ps:
        assert abs(den(p.location)) <= 1e-10


def test_roots_of_random_products_have_small_residuals():
    rng = random.Random(2106)
    s = CPoly([0, 1])
    for _ in range(25):
        roots = []
        p = CPoly([1])
        for _ in range(rng.randint(2, 6)):
            root = Qi(rng.randint(-4, 4), rng.randint(-4, 4))
            roots.append(complex(root))
            p = p * (s - CPoly.scalar(root))
        found = poly_roots(p)
        assert sum(q.multiplicity for q in found) == len(roots)
        for q in found:
            assert abs(p(q.location)) <= 1e-10 * max(
                abs(complex(c)) for c in p.coeffs)
            assert min(abs(q.location - r) for r in roots) <= 1e-7


# --- spectra ------------------------------------------------------------------


def test_spectrum_of_shifted_conjugate_pair():
    spec = spectrum_of_rational(RatFunc(CPoly([1]), CPoly([17, -2, 1])))
    assert len(spec.frequencies) == 2
    assert abs(spec.frequencies[0] + 4) <= 1e-9
    assert abs(spec.frequencies[1] - 4) <= 1e-9
    assert not spec.infinite_singularity


def test_laurent_polynomial_spectrum_empty():
    r = RatFunc(CPoly([1, 0, 0, 0, 2]), CPoly([0, 0, 0, 1]))   # s^-3 + 2s
    assert spectrum_of_rational(r).frequencies == ()


def test_constant_image_spectrum_empty():
    assert spectrum_of_rational(RatFunc.ONE).frequencies == ()
    assert spectrum_of_rational(RatFunc.ONE).sources == ()


def test_real_pole_rationals_have_empty_spectrum():
    rng = random.Random(2107)
    s = CPoly([0, 1])
    for _ in range(25):
        den = CPoly([1])
        for _ in range(rng.randint(1, 4)):
            den = den * (s - CPoly.scalar(Qi(rng.randint(-5, 5))))
        num = CPoly([Qi(rng.randint(-5, 5)) for _ in range(den.degree)])
        if num.is_zero:
            num = CPoly.ONE
        spec = spectrum_of_rational(RatFunc(num, den))
        assert spec.frequencies == ()


def test_spectrum_symmetry_for_real_coefficients():
    rng = random.Random(2108)
    for _ in range(25):
        num = CPoly([Qi(rng.randint(-4, 4)) for _ in range(3)])
        den = CPoly([Qi(rng.randint(-4, 4)) for _ in range(4)] + [Qi(1)])
        if num.is_zero:
            num = CPoly.ONE
        freqs = spectrum_of_rational(RatFunc(num, den)).frequencies
        assert freqs == tuple(sorted(-f for f in freqs))


def test_zero_frequency_never_listed():
    # real poles only on the axis: a pole at 0 and at 5
    r = RatFunc(CPoly.ONE, CPoly([0, -5, 1]))
    assert spectrum_of_rational(r).frequencies == ()


def test_spectrum_json_rendering():
    spec = spectrum_of_rational(RatFunc(CPoly([3]), CPoly([9, 0, 1])))
    text = spec.to_json()
    assert text == ('{"frequencies":[-3,3],"sources":['
                    '{"re":0,"im":-3,"kind":"pole","order":1},'
                    '{"re":0,"im":3,"kind":"pole","order":1}],'
                    '"infinite_singularity":false}')
    data = json.loads(text)
    assert data["frequencies"] == [-3, 3]
    assert data["infinite_singularity"] is False


def test_clean_frequencies_merges_and_symmetrizes():
    vals = clean_frequencies([3.0000000000000004, -2.9999999999999996,
                              1e-15, 0.0])
    assert len(vals) == 2
    assert vals[0] == -vals[1]
    assert abs(vals[1] - 3) <= 1e-9


def test_snap_axes_zeroes_roundoff_components():
    assert snap_axes(complex(2.2e-16, -3.0)) == -3j
    assert snap_axes(complex(5.0, 1e-12)) == 5.0 + 0j
    assert snap_axes(complex(1.0, 2.0)) == 1 + 2j
    assert snap_axes(complex(1e-4, 1.0)) == complex(1e-4, 1.0)


# --- partial fractions --------------------------------------------------------


def test_partial_fractions_simple_pair():
    r = RatFunc(CPoly([0, 2]), CPoly([-1, 0, 1]))   # 2s/(s^2-1)
    pf = partial_fractions(r)
    assert pf.poly_part.is_zero
    assert len(pf.terms) == 2
    for pole, order, coeff in pf.terms:
        assert order == 1
        assert abs(coeff - 1) <= 1e-9
    assert {round(t.pole.real) for t in pf.terms} == {-1, 1}


def test_partial_fractions_double_pole():
    rng = random.Random(2109)
    s = CPoly([0, 1])
    for _ in range(10):
        a = Qi(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        r = RatFunc(CPoly.ONE, (s - CPoly.scalar(a)) ** 2)
        pf = partial_fractions(r)
        assert len(pf.terms) == 1
        pole, order, coeff = pf.terms[0]
        assert order == 2
        assert abs(pole - complex(a)) <= 1e-9
        assert abs(coeff - 1) <= 1e-9


def test_partial_fractions_mixed_orders():
    # (s+1)/((s-2)^2 (s+3)): hand calculation gives
    # 2/25/(s-2) + 3/5/(s-2)^2 - 2/25/(s+3)
    s = CPoly([0, 1])
    den = (s - CPoly.scalar(Qi(2))) ** 2 * (s + CPoly.scalar(Qi(3)))
    pf = partial_fractions(RatFunc(CPoly([1, 1]), den))
    want = {(-3, 1): -2 / 25, (2, 1): 2 / 25, (2, 2): 3 / 5}
    assert len(pf.terms) == 3
    for pole, order, coeff in pf.terms:
        key = (round(pole.real), order)
        assert key in want
        assert abs(coeff - want[key]) <= 1e-9


def test_partial_fractions_polynomial_part():
    s = CPoly([0, 1])
    r = RatFunc(s ** 3, s - CPoly.scalar(Qi(1)))
    pf = partial_fractions(r)
    assert pf.poly_part == CPoly([1, 1, 1])
    assert len(pf.terms) == 1
    pole, order, coeff = pf.terms[0]
    assert order == 1 and abs(pole - 1) <= 1e-9 and abs(coeff - 1) <= 1e-9


def test_partial_fractions_reconstruction_property():
    rng = random.Random(2110)
    for _ in range(25):
        r = _rand_ratfunc(rng, 4)
        if r.is_zero:
            continue
        pf = partial_fractions(r)
        for _ in range(5):
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if abs(r.den(z)) < 1e-3:
                continue
            back = complex(pf.poly_part(z)) + sum(
                c / (z - p) ** m for p, m, c in pf.terms)
            assert abs(back - r(z)) <= 1e-6 * (1 + abs(r(z)))


# --- algebraic derivative -----------------------------------------------------


def test_alg_deriv_simple_pole():
    rng = random.Random(2111)
    s = CPoly([0, 1])
    for _ in range(20):
        a = CPoly.scalar(_rand_qi(rng))
        r = RatFunc(CPoly.ONE, s - a)
        assert alg_deriv(r) == -RatFunc(CPoly.ONE, (s - a) ** 2)


def test_alg_deriv_tone_image():
    w2 = Qi(9)
    r = RatFunc(CPoly([0, 1]), CPoly([w2, Qi(0), Qi(1)]))
    want = RatFunc(CPoly([w2, Qi(0), Qi(-1)]),
                   CPoly([w2, Qi(0), Qi(1)]) ** 2)
    assert alg_deriv(r) == want


def test_alg_deriv_of_constants_is_zero():
    assert alg_deriv(RatFunc.ONE).is_zero
    assert alg_deriv(RatFunc(Qi(2, 5))).is_zero


def test_alg_deriv_product_rule():
    rng = random.Random(2112)
    for _ in range(40):
        a = _rand_ratfunc(rng, 2)
        b = _rand_ratfunc(rng, 2)
        assert alg_deriv(a * b) == alg_deriv(a) * b + a * alg_deriv(b)
