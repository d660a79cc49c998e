"""Realizing constructions for achievable weighted bidegrees."""

import pytest

from wbideg import (
    NotRealizable,
    decompose,
    enumerate_Z,
    evaluate_word,
    in_ge2_set,
    in_le1_set,
    map_equal,
    parse_poly,
    realize,
    wmdeg_map,
)
from wbideg.maps import PolyMap


def _check(w, d):
    word = realize(w, d)
    assert wmdeg_map(evaluate_word(word), w) == d
    return word


def test_realize_exceptional():
    assert realize((2, 3), (2, 3)) == []
    word = _check((2, 3), (3, 2))
    assert len(word) == 1
    m = evaluate_word(_check((2, 3), (3, 3)))
    assert map_equal(m, PolyMap(parse_poly("x + y"), parse_poly("y")))


def test_realize_known_words():
    from wbideg import Y

    m = evaluate_word(_check((1, 1), (2, 6)))
    f1 = parse_poly("x + y^2")
    assert map_equal(m, PolyMap(f1, Y + f1 ** 3))

    m = evaluate_word(_check((2, 3), (8, 2)))
    assert map_equal(m, PolyMap(parse_poly("y + x^4"), parse_poly("x")))


def test_realize_not_realizable():
    with pytest.raises(NotRealizable):
        realize((2, 3), (2, 5))
    with pytest.raises(NotRealizable):
        realize((1, 1), (2, 3))
    with pytest.raises(NotRealizable):
        realize((2, 3), (2, 2))


@pytest.mark.parametrize("w", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 5), (5, 3), (3, 2)])
def test_realize_complete_small(w):
    for d in sorted(enumerate_Z(w, 18)):
        _check(w, d)


@pytest.mark.parametrize("w", [(1, 2), (2, 3), (5, 2)])
def test_realized_length_matches_stratum(w):
    # a realized word's normalized length lands in the right stratum
    for d in sorted(enumerate_Z(w, 14)):
        word = realize(w, d)
        nf = decompose(evaluate_word(word))
        if nf.length <= 1:
            assert in_le1_set(w, d)
        else:
            assert in_ge2_set(w, d)
