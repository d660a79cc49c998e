"""Plane polynomial maps built from affine and elementary-shear generators.

A generator word is a sequence of factors stored in application order:
the first factor is applied first, so evaluate([g1, g2]) = g2 o g1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .grammar import format_poly, parse_poly
from .poly import NEG_INF, Poly, WDeg, Weight, X, Y, total_deg, wdeg
from .rationals import QQ, rat, rat_str

Bidegree = Tuple[WDeg, WDeg]


@dataclass(frozen=True)
class PolyMap:
    """A polynomial self-map of the plane (not necessarily invertible)."""

    f1: Poly
    f2: Poly


IDENTITY_MAP = PolyMap(X, Y)


class AffineMap:
    """Invertible affine map v -> M v + t with exact rational entries."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix, translation=(0, 0)):
        (a, b), (c, d) = matrix
        a, b, c, d = rat(a), rat(b), rat(c), rat(d)
        if a * d - b * c == 0:
            raise ValueError("affine map has singular linear part")
        t1, t2 = translation
        self.matrix = ((a, b), (c, d))
        self.translation = (rat(t1), rat(t2))

    @staticmethod
    def identity() -> "AffineMap":
        return AffineMap(((1, 0), (0, 1)))

    @staticmethod
    def swap() -> "AffineMap":
        return AffineMap(((0, 1), (1, 0)))

    def is_identity(self) -> bool:
        (a, b), (c, d) = self.matrix
        t1, t2 = self.translation
        return (a, b, c, d) == (1, 0, 0, 1) and (t1, t2) == (0, 0)

    def det(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def to_polymap(self) -> PolyMap:
        (a, b), (c, d) = self.matrix
        t1, t2 = self.translation
        f1 = X.scale(a) + Y.scale(b) + Poly.const(t1)
        f2 = X.scale(c) + Y.scale(d) + Poly.const(t2)
        return PolyMap(f1, f2)

    def inverse(self) -> "AffineMap":
        (a, b), (c, d) = self.matrix
        t1, t2 = self.translation
        det = a * d - b * c
        ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
        # inverse translation: -M^-1 t
        return AffineMap(
            ((ia, ib), (ic, id_)),
            (-(ia * t1 + ib * t2), -(ic * t1 + id_ * t2)),
        )

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self o other, still affine."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        s1, s2 = other.translation
        t1, t2 = self.translation
        return AffineMap(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            (a * s1 + b * s2 + t1, c * s1 + d * s2 + t2),
        )

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.matrix == other.matrix and self.translation == other.translation

    def __hash__(self):
        return hash((self.matrix, self.translation))

    def __repr__(self):
        return f"AffineMap({self.matrix!r}, {self.translation!r})"


class ElementaryMap:
    """Shear along one axis: axis 'y' is (x, y + f(x)), axis 'x' is (x + f(y), y).

    f must be a nonconstant polynomial in the fixed variable.  Raw words
    permit deg f = 1 and constant terms; the normal form of the
    decomposition module is stricter (deg f >= 2, no low-order terms there
    either, since those get absorbed into the flanking affine maps).
    """

    __slots__ = ("axis", "f")

    def __init__(self, axis: str, f: Poly):
        if axis not in ("x", "y"):
            raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
        if total_deg(f) < 1:
            raise ValueError("shear polynomial must be nonconstant")
        var_ok = all(
            (b == 0 if axis == "y" else a == 0) for a, b in f.terms
        )
        if not var_ok:
            other = "x" if axis == "y" else "y"
            raise ValueError(f"shear on axis {axis!r} must use only {other}")
        self.axis = axis
        self.f = f

    def to_polymap(self) -> PolyMap:
        if self.axis == "y":
            return PolyMap(X, Y + self.f)
        return PolyMap(X + self.f, Y)

    def inverse(self) -> "ElementaryMap":
        return ElementaryMap(self.axis, -self.f)

    def __eq__(self, other):
        if not isinstance(other, ElementaryMap):
            return NotImplemented
        return self.axis == other.axis and self.f == other.f

    def __hash__(self):
        return hash((self.axis, self.f))

    def __repr__(self):
        return f"ElementaryMap({self.axis!r}, {self.f!r})"


Factor = Union[AffineMap, ElementaryMap]
GeneratorWord = Sequence[Factor]


def shear(axis: str, f: Poly) -> ElementaryMap:
    return ElementaryMap(axis, f)


def compose(g: PolyMap, f: PolyMap) -> PolyMap:
    """g o f: the components of g with f's components substituted in."""
    images = (f.f1, f.f2)
    return PolyMap(g.f1.substitute(images), g.f2.substitute(images))


def evaluate_word(word: GeneratorWord) -> PolyMap:
    """Composite of the word's factors; the first listed factor acts first."""
    result = IDENTITY_MAP
    for factor in word:
        result = compose(factor.to_polymap(), result)
    return result


def invert_word(word: GeneratorWord) -> List[Factor]:
    """Factor inverses in reversed order."""
    return [factor.inverse() for factor in reversed(word)]


def wmdeg_map(m: PolyMap, w: Weight) -> Bidegree:
    return (wdeg(m.f1, w), wdeg(m.f2, w))


def mdeg_map(m: PolyMap) -> Bidegree:
    return wmdeg_map(m, (1, 1))


def map_equal(a: PolyMap, b: PolyMap) -> bool:
    return a.f1 == b.f1 and a.f2 == b.f2


# -- JSON rendering of generator words ---------------------------------
#
# A word is a JSON array in application order.  Factors:
#   {"type": "affine", "matrix": [[a, b], [c, d]], "translation": [t1, t2]}
#   {"type": "elementary", "axis": "x" | "y", "f": "<polynomial text>"}
# with rationals rendered as strings "p" or "p/q".


def factor_to_json(factor: Factor) -> dict:
    if isinstance(factor, AffineMap):
        return {
            "type": "affine",
            "matrix": [[rat_str(e) for e in row] for row in factor.matrix],
            "translation": [rat_str(t) for t in factor.translation],
        }
    return {"type": "elementary", "axis": factor.axis, "f": format_poly(factor.f)}


def factor_from_json(data: dict) -> Factor:
    if data["type"] == "affine":
        matrix = tuple(tuple(rat(e) for e in row) for row in data["matrix"])
        translation = tuple(rat(t) for t in data["translation"])
        return AffineMap(matrix, translation)
    if data["type"] == "elementary":
        return ElementaryMap(data["axis"], parse_poly(data["f"]))
    raise ValueError(f"unknown factor type {data.get('type')!r}")


def word_to_json(word: GeneratorWord) -> list:
    return [factor_to_json(f) for f in word]


def word_from_json(data: list) -> List[Factor]:
    return [factor_from_json(d) for d in data]
