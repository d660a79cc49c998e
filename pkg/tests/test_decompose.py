"""Normal-form decomposition, length, and exact inversion."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbideg import (
    AffineMap,
    ElementaryMap,
    NormalForm,
    NotAutomorphism,
    PolyMap,
    X,
    Y,
    compose,
    decompose,
    desk_pool,
    evaluate_word,
    invert_map,
    length,
    map_equal,
    normalize_word,
    parse_poly,
)
from wbideg.decompose import (
    DEGREE_NOT_DIVISIBLE,
    LEADING_FORMS_NOT_PROPORTIONAL,
    SINGULAR_AFFINE,
)
from wbideg.harness import random_normal_word
from wbideg.maps import IDENTITY_MAP


def pmap(f1, f2):
    return PolyMap(parse_poly(f1), parse_poly(f2))


def test_identity_has_length_zero():
    nf = decompose(IDENTITY_MAP)
    assert nf.length == 0
    assert nf.l1.is_identity()
    assert nf.l2.is_identity()


def test_affine_map_has_length_zero():
    m = pmap("2x + y - 1", "x - y + 3")
    nf = decompose(m)
    assert nf.length == 0
    assert map_equal(nf.evaluate(), m)


def test_single_shear():
    m = pmap("x", "y + x^2")
    nf = decompose(m)
    assert nf.length == 1
    assert nf.triangulars[0] == ElementaryMap("y", parse_poly("x^2"))
    assert map_equal(nf.evaluate(), m)


def test_shear_with_lower_order_terms():
    # low-order parts of the shear survive in the normal form
    m = pmap("x", "y + x^3 - 2x^2")
    nf = decompose(m)
    assert nf.length == 1
    assert map_equal(nf.evaluate(), m)


def test_two_shears():
    word = [
        ElementaryMap("y", parse_poly("x^2")),
        ElementaryMap("x", parse_poly("y^3")),
    ]
    m = evaluate_word(word)
    nf = decompose(m)
    assert nf.length == 2
    assert map_equal(nf.evaluate(), m)


def test_affines_absorbed_not_counted():
    word = [
        AffineMap(((1, 1), (0, 1)), (2, -1)),
        ElementaryMap("y", parse_poly("x^2 - x")),
        AffineMap.swap(),
        ElementaryMap("y", parse_poly("-x^3")),
        AffineMap(((2, 0), (1, 1))),
    ]
    m = evaluate_word(word)
    nf = decompose(m)
    # swap turns the second y-shear into an x-shear, so nothing cancels
    assert nf.length == 2
    assert map_equal(nf.evaluate(), m)


def test_adjacent_same_axis_shears_merge():
    word = [
        ElementaryMap("y", parse_poly("x^2")),
        ElementaryMap("y", parse_poly("x^3")),
    ]
    assert normalize_word(word).length == 1


def test_shears_cancel():
    word = [
        ElementaryMap("y", parse_poly("x^2")),
        ElementaryMap("y", parse_poly("-x^2")),
    ]
    nf = normalize_word(word)
    assert nf.length == 0
    assert map_equal(nf.evaluate(), IDENTITY_MAP)


def test_length_is_word_independent():
    # the same map built from two different words
    t = ElementaryMap("y", parse_poly("x^2"))
    m1 = evaluate_word([t, AffineMap.swap()])
    m2 = evaluate_word([AffineMap.swap(), ElementaryMap("x", parse_poly("y^2"))])
    assert map_equal(m1, m2)
    assert length(m1) == length(m2) == 1


@pytest.mark.parametrize(
    "f1,f2,reason",
    [
        ("x^2", "y", LEADING_FORMS_NOT_PROPORTIONAL),
        ("x", "x*y", LEADING_FORMS_NOT_PROPORTIONAL),
        ("x + y^2", "y + x^2", LEADING_FORMS_NOT_PROPORTIONAL),
        ("x + y^2", "y + x^3", DEGREE_NOT_DIVISIBLE),
        ("x + y", "2x + 2y", SINGULAR_AFFINE),
        ("x", "x", SINGULAR_AFFINE),
        ("x + y^2", "x - y^2", LEADING_FORMS_NOT_PROPORTIONAL),
    ],
)
def test_rejections(f1, f2, reason):
    with pytest.raises(NotAutomorphism) as excinfo:
        decompose(pmap(f1, f2))
    assert excinfo.value.reason == reason


def test_constant_component_rejected():
    with pytest.raises(NotAutomorphism) as excinfo:
        decompose(pmap("x", "3"))
    assert excinfo.value.reason == SINGULAR_AFFINE


def test_normal_form_validation():
    with pytest.raises(ValueError):
        NormalForm(
            AffineMap.identity(),
            (ElementaryMap("y", parse_poly("x")),),  # degree 1
            AffineMap.identity(),
        )
    with pytest.raises(ValueError):
        NormalForm(
            AffineMap.identity(),
            (
                ElementaryMap("y", parse_poly("x^2")),
                ElementaryMap("y", parse_poly("x^3")),  # same axis twice
            ),
            AffineMap.identity(),
        )


def test_normal_form_json_roundtrip():
    f2 = parse_poly("y + x^2")
    m = PolyMap(X + f2 ** 3, f2)
    nf = decompose(m)
    data = nf.to_json()
    assert data["length"] == nf.length
    restored = NormalForm.from_json(data)
    assert map_equal(restored.evaluate(), m)


def test_invert_map():
    m = pmap("x", "y + x^2")
    inv = invert_map(m)
    assert map_equal(inv, pmap("x", "y - x^2"))
    assert map_equal(compose(inv, m), IDENTITY_MAP)


def test_invert_map_affine():
    m = pmap("2x + 1", "y - x")
    inv = invert_map(m)
    assert map_equal(compose(inv, m), IDENTITY_MAP)
    assert map_equal(compose(m, inv), IDENTITY_MAP)


def test_invert_map_rejects_non_automorphism():
    with pytest.raises(NotAutomorphism):
        invert_map(pmap("x^2", "y"))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_random_words_roundtrip(seed):
    rng = random.Random(seed)
    word = random_normal_word(rng, desk_pool())
    m = evaluate_word(word)
    nf = decompose(m)
    assert map_equal(nf.evaluate(), m)
    shears = sum(1 for f in word if isinstance(f, ElementaryMap))
    assert nf.length == shears
    inv = invert_map(m)
    assert map_equal(invert_map(inv), m)
