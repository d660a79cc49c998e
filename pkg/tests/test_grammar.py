"""Polynomial text grammar: parsing and pretty-printing."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbideg import NegativeExponentError, ParseError, Poly, format_poly, parse_poly


@pytest.mark.parametrize(
    "text,terms",
    [
        ("0", {}),
        ("x", {(1, 0): 1}),
        ("-x", {(1, 0): -1}),
        ("3/2", {(0, 0): "3/2"}),
        ("x^2*y", {(2, 1): 1}),
        ("2x y", {(1, 1): 2}),  # implicit multiplication
        ("x^2 - x^2", {}),
        ("1/2*x + 1/2*x", {(1, 0): 1}),
        ("y^10", {(0, 10): 1}),
        ("-3/4x^2y^3", {(2, 3): "-3/4"}),
    ],
)
def test_parse(text, terms):
    assert parse_poly(text) == Poly(terms)


def test_whitespace_insensitive():
    assert parse_poly(" x ^ 2 + 2 * y ") == parse_poly("x^2+2y")


@pytest.mark.parametrize("bad", ["", "x +", "x^", "^2", "z", "x**2", "(x)", "1//2"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_parse_error_position():
    try:
        parse_poly("x + @")
    except ParseError as exc:
        assert exc.position == 4
    else:
        pytest.fail("expected ParseError")


def test_negative_exponent_is_its_own_error():
    with pytest.raises(NegativeExponentError):
        parse_poly("x^-2")


@pytest.mark.parametrize(
    "terms,text",
    [
        ({}, "0"),
        ({(1, 0): 1}, "x"),
        ({(1, 0): -1}, "-x"),
        ({(0, 0): "3/2"}, "3/2"),
        ({(2, 1): 1, (0, 0): 3}, "x^2*y + 3"),
        ({(1, 1): "-1/2"}, "-1/2*x*y"),
        ({(2, 0): 1, (0, 2): -1, (1, 1): 2}, "x^2 + 2*x*y - y^2"),
    ],
)
def test_format(terms, text):
    assert format_poly(Poly(terms)) == text


coeffs = st.fractions(min_value=-99, max_value=99, max_denominator=13).filter(
    lambda f: f != 0
)
polys = st.dictionaries(
    st.tuples(st.integers(0, 9), st.integers(0, 9)), coeffs, max_size=8
).map(Poly)


@given(polys)
@settings(max_examples=100, deadline=None)
def test_format_parse_roundtrip(h):
    assert parse_poly(format_poly(h)) == h
