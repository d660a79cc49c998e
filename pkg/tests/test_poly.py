"""Polynomial arithmetic and weighted degrees."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbideg import (
    NEG_INF,
    DegreeOverflow,
    Poly,
    X,
    Y,
    ZeroPolynomialError,
    leading_form,
    total_deg,
    wdeg,
)
from wbideg.poly import get_max_total_degree, set_max_total_degree
from wbideg.rationals import rat


def p(text):
    from wbideg import parse_poly

    return parse_poly(text)


coeffs = st.fractions(min_value=-30, max_value=30, max_denominator=7).filter(
    lambda f: f != 0
)

exponents = st.tuples(st.integers(0, 6), st.integers(0, 6))

polys = st.dictionaries(exponents, coeffs, max_size=6).map(Poly)

weights = st.tuples(st.integers(1, 5), st.integers(1, 5))


def test_zero_poly():
    z = Poly.zero()
    assert z.is_zero()
    assert not z
    assert z.terms == {}
    assert wdeg(z, (1, 1)) == NEG_INF
    assert total_deg(z) == NEG_INF


def test_canonical_form_drops_zero_coefficients():
    assert Poly({(1, 0): 0, (0, 1): 2}).terms == {(0, 1): rat(2)}
    assert Poly.monomial(0, 3, 3).is_zero()


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Poly({(-1, 0): 1})


def test_equality_is_semantic():
    a = p("x^2 + y") + p("y")
    b = p("x^2 + 2y")
    assert a == b
    assert hash(a) == hash(b)


def test_monomial_arithmetic():
    assert X * Y == Poly.monomial(1, 1, 1)
    assert X + X == Poly.monomial(2, 1, 0)
    assert X - X == Poly.zero()
    assert (X + Y) * (X - Y) == p("x^2 - y^2")


def test_pow():
    assert (X + Y) ** 0 == Poly.const(1)
    assert (X + Y) ** 2 == p("x^2 + 2x*y + y^2")
    assert (X + Y) ** 5 == p(
        "x^5 + 5x^4*y + 10x^3*y^2 + 10x^2*y^3 + 5x*y^4 + y^5"
    )
    with pytest.raises(ValueError):
        X ** -1


def test_scale():
    assert p("2x + y").scale(Fraction(1, 2)) == p("x + 1/2*y")
    assert p("2x + y").scale(0) == Poly.zero()


def test_substitute():
    h = p("x^2 + x*y")
    assert h.substitute((Y, X)) == p("y^2 + x*y")
    assert h.substitute((X + Y, Poly.const(1))) == p("x^2 + 2x*y + y^2 + x + y")
    assert Poly.zero().substitute((X, Y)) == Poly.zero()


def test_wdeg_examples():
    assert wdeg(p("x^3 + x*y + y^2"), (2, 3)) == 6
    assert wdeg(p("x^3 + x*y + y^2"), (1, 1)) == 3
    assert wdeg(Poly.const(5), (2, 3)) == 0
    assert total_deg(p("x*y^4")) == 5


def test_leading_form_total_degree():
    assert leading_form(p("x^2 + x*y + y + 1")) == p("x^2 + x*y")
    assert leading_form(p("3"), (2, 3)) == p("3")
    with pytest.raises(ZeroPolynomialError):
        leading_form(Poly.zero())


def test_leading_form_weighted():
    # weight (2,3): x^3 and y^2 both have weighted degree 6
    assert leading_form(p("x^3 + x*y + y^2"), (2, 3)) == p("x^3 + y^2")


def test_degree_guard():
    old = get_max_total_degree()
    try:
        set_max_total_degree(8)
        with pytest.raises(DegreeOverflow):
            _ = p("x^5") * p("y^5")
        assert p("x^4") * p("y^4") == p("x^4*y^4")
    finally:
        set_max_total_degree(old)
    with pytest.raises(ValueError):
        set_max_total_degree(0)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Poly.zero() == a
    assert a * Poly.const(1) == a
    assert a - a == Poly.zero()


@given(polys, polys, weights)
@settings(max_examples=60, deadline=None)
def test_wdeg_valuation_law(a, b, w):
    # the coefficient field has no zero divisors, so degrees add exactly
    assert wdeg(a * b, w) == wdeg(a, w) + wdeg(b, w)


@given(polys, polys, weights)
@settings(max_examples=60, deadline=None)
def test_wdeg_subadditive(a, b, w):
    assert wdeg(a + b, w) <= max(wdeg(a, w), wdeg(b, w))


@given(polys, weights)
@settings(max_examples=60, deadline=None)
def test_leading_form_carries_the_degree(a, w):
    if a.is_zero():
        return
    lf = leading_form(a, w)
    assert wdeg(lf, w) == wdeg(a, w)
    rest = a - lf
    assert rest.is_zero() or wdeg(rest, w) < wdeg(a, w)
