import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from feec_orthant.errors import (
    DegreeTooHigh,
    DimensionMismatch,
    NotDivisible,
    NotHomogeneous,
    NotPolynomial,
    ZeroPolynomial,
)
from feec_orthant.ratpoly import (
    Polynomial,
    SLocalPoly,
    divide_by_s,
    homogeneous_degree,
    homogenize,
    power_of_s,
    substitute,
)
from randforms import random_poly

x, y, z = (Polynomial.variable(3, i) for i in range(3))
s = Polynomial.s(3)


def test_difference_of_squares():
    assert (x + y) * (x - y) == x**2 - y**2


def test_additive_inverse_is_empty():
    p = x * y + 3 * z
    assert (p + (-p)).terms == {}
    assert not (p - p)


def test_localization_cancels():
    q = SLocalPoly(x, 1) * s
    assert q.s_power == 0 and q.numerator == x


def test_integral_fractions_collapse_to_int():
    p = x * Fraction(4, 2)
    (c,) = p.terms.values()
    assert type(c) is int and c == 2


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        x + Polynomial.variable(2, 0)


def test_divide_by_s_examples():
    assert divide_by_s(x**2 + x * y + x * z) == x
    with pytest.raises(NotDivisible):
        divide_by_s(x)
    assert divide_by_s(s**3 * y) == s**2 * y


def test_divide_by_s_rejects_non_multiples_of_high_degree():
    with pytest.raises(NotDivisible):
        divide_by_s(x**3 + y**3 + z**3)


def test_homogeneous_degree_examples():
    assert homogeneous_degree(x * y**2 * z) == 4
    assert homogeneous_degree(s**2) == 2
    with pytest.raises(NotHomogeneous):
        homogeneous_degree(x + y**2)
    with pytest.raises(ZeroPolynomial):
        homogeneous_degree(Polynomial.zero(3))


def test_homogenize_examples():
    assert homogenize(x**4 + 3 * x * y + y**3, 4) == x**4 + 3 * s**2 * x * y + s * y**3
    assert homogenize(Polynomial.one(3), 2) == s**2
    assert homogenize(x**2, 2) == x**2
    with pytest.raises(DegreeTooHigh):
        homogenize(x**3, 2)


def test_substitute_examples():
    one = Polynomial.one(3)
    assert substitute(s, 2, one - x - y) == one
    assert substitute(x * y, 0, Polynomial.zero(3)) == 0
    assert substitute(Polynomial.p(3), 2, Polynomial.zero(3)) == 0


def test_power_of_s_matches_repeated_product():
    assert power_of_s(3, 3) == s * s * s
    assert power_of_s(3, 0) == 1


def test_slocal_normalizes_numerator():
    q = SLocalPoly(s**2 * x, 3)
    assert q.s_power == 1 and q.numerator == x
    assert SLocalPoly(x, -2) == SLocalPoly(s**2 * x, 0)
    assert SLocalPoly(Polynomial.zero(3), 4).s_power == 0


def test_slocal_to_polynomial():
    assert SLocalPoly(s * y, 1).to_polynomial() == y
    with pytest.raises(NotPolynomial):
        SLocalPoly(y, 1).to_polynomial()


def test_slocal_arithmetic_with_different_powers():
    a = SLocalPoly(x, 1)
    b = SLocalPoly(y, 2)
    total = a + b
    assert total == SLocalPoly(x * s + y, 2)
    assert (a - a).is_zero()
    assert SLocalPoly(x * y, 3).homogeneous_degree() == -1


def test_slocal_quotient_rule():
    # d/dx (x / s) = (s - x) / s^2
    q = SLocalPoly(x, 1).diff(0)
    assert q == SLocalPoly(s - x, 2)


def test_formatting():
    assert (x**2 - Fraction(1, 2) * y).format() == "x^2 - 1/2*y"
    assert SLocalPoly(x * y, 1).format() == "(x*y/s)"
    assert Polynomial.zero(3).format() == "0"


def test_default_names_beyond_four_coordinates():
    v = Polynomial.variable(5, 4)
    assert v.format() == "x5"


@given(st.integers(0, 2**32 - 1))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 4)
    a, b, c = (random_poly(rng, nv, rng.randint(0, 3), homogeneous=False) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b - b == a


@given(st.integers(0, 2**32 - 1))
def test_evaluation_is_a_ring_homomorphism(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 4)
    a, b = (random_poly(rng, nv, rng.randint(0, 3), homogeneous=False) for _ in range(2))
    point = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(nv)]
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@given(st.integers(0, 2**32 - 1))
def test_divide_by_s_inverts_multiplication(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 4)
    p = random_poly(rng, nv, rng.randint(0, 4), homogeneous=False)
    sv = Polynomial.s(nv)
    assert divide_by_s(p * sv) == p
    assert divide_by_s(p * sv * sv) == p * sv


@given(st.integers(0, 2**32 - 1))
def test_homogenize_restricts_back(seed):
    rng = random.Random(seed)
    nv = rng.randint(2, 4)
    p = random_poly(rng, nv, 3, homogeneous=False)
    h = homogenize(p, 4)
    assert h.is_homogeneous() and h.homogeneous_degree() == 4
    # on the slice s = 1 the homogenization agrees with p
    pt = [Fraction(rng.randint(0, 6)) for _ in range(nv - 1)]
    pt.append(1 - sum(pt))
    assert h.evaluate(pt) == p.evaluate(pt)


@given(st.integers(0, 2**32 - 1))
def test_derivative_leibniz(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 4)
    a, b = (random_poly(rng, nv, 3, homogeneous=False) for _ in range(2))
    i = rng.randrange(nv)
    assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)
