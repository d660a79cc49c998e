"""Reduction of plane polynomial maps to the affine/triangular normal form.

A plane automorphism factors as L2 o T_l o ... o T_1 o L1 with L1, L2
affine and the T_i elementary shears of total degree >= 2 on alternating
axes; l (the number of shears) is unique and is the length of the map.

decompose() implements the classical leading-form reduction: while some
component has total degree > 1, either the two degrees are equal and the
leading forms must be proportional (subtract a scalar multiple of one
component from the other), or the smaller degree must divide the larger
and the larger leading form must be a scalar multiple of a power of the
smaller one (subtract that power).  Every step strictly decreases a
component's degree, and any failed test certifies that the map is not an
automorphism.  Exact rational arithmetic makes the tests decidable.

The collected reduction factors, inverted and replayed in reverse, are
reassembled into the normal form.  A linear fix (the equal-degree step)
always targets the component that was stripped immediately before it, so
its inverse arrives directly below that strip's shears and merges into
them; this keeps the reassembly purely local.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from .maps import (
    AffineMap,
    ElementaryMap,
    Factor,
    PolyMap,
    compose,
    evaluate_word,
    factor_to_json,
    factor_from_json,
    invert_word,
    map_equal,
)
from .poly import Poly, get_max_total_degree, leading_form, total_deg
from .rationals import QQ

DEGREE_NOT_DIVISIBLE = "degree_not_divisible"
LEADING_FORMS_NOT_PROPORTIONAL = "leading_forms_not_proportional"
SINGULAR_AFFINE = "singular_affine"


class NotAutomorphism(Exception):
    """The reduction certified that the map is not a polynomial automorphism."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        message = reason if not detail else f"{reason}: {detail}"
        super().__init__(message)


@dataclass(frozen=True)
class NormalForm:
    """L2 o T_l o ... o T_1 o L1 with strict alternating shears."""

    l1: AffineMap
    triangulars: Tuple[ElementaryMap, ...]
    l2: AffineMap

    def __post_init__(self):
        previous = None
        for t in self.triangulars:
            if total_deg(t.f) < 2:
                raise ValueError("normal-form shear must have total degree >= 2")
            if previous is not None and t.axis == previous:
                raise ValueError("normal-form shears must alternate axes")
            previous = t.axis

    @property
    def length(self) -> int:
        return len(self.triangulars)

    def to_word(self) -> List[Factor]:
        """Factors in application order: L1 first, L2 last."""
        return [self.l1, *self.triangulars, self.l2]

    def evaluate(self) -> PolyMap:
        return evaluate_word(self.to_word())

    def to_json(self) -> dict:
        return {
            "l1": factor_to_json(self.l1),
            "triangulars": [factor_to_json(t) for t in self.triangulars],
            "l2": factor_to_json(self.l2),
            "length": self.length,
        }

    @staticmethod
    def from_json(data: dict) -> "NormalForm":
        return NormalForm(
            factor_from_json(data["l1"]),
            tuple(factor_from_json(t) for t in data["triangulars"]),
            factor_from_json(data["l2"]),
        )


def _proportionality(template: Poly, target: Poly):
    """Scalar c with target == c * template, or None."""
    exponent, coeff = next(iter(template.terms.items()))
    c = target.terms.get(exponent, QQ(0)) / coeff
    if c == 0:
        return None
    if (target - template.scale(c)).is_zero():
        return c
    return None


def _extract_affine(p: Poly, q: Poly) -> AffineMap:
    """Read off an affine map from two components of total degree <= 1."""

    def coeffs(h: Poly):
        return (
            h.terms.get((1, 0), QQ(0)),
            h.terms.get((0, 1), QQ(0)),
            h.terms.get((0, 0), QQ(0)),
        )

    a, b, t1 = coeffs(p)
    c, d, t2 = coeffs(q)
    if a * d - b * c == 0:
        raise NotAutomorphism(SINGULAR_AFFINE, "linear part is singular")
    return AffineMap(((a, b), (c, d)), (t1, t2))


# A reduction step, recorded in emission order.  `axis` is the shear axis
# of the left-composed factor ('y' modifies the second component), `sub`
# the polynomial that was subtracted (c*x^q or c*y^q; q = 1 for the
# equal-degree linear fix).
_Step = Tuple[str, Poly]


def _reduce(m: PolyMap) -> Tuple[List[_Step], AffineMap]:
    p, q = m.f1, m.f2
    steps: List[_Step] = []
    last_stripped: Optional[str] = None
    while True:
        d1, d2 = total_deg(p), total_deg(q)
        if d1 <= 1 and d2 <= 1:
            break
        if d1 == d2:
            c = _proportionality(leading_form(p), leading_form(q))
            if c is None:
                raise NotAutomorphism(
                    LEADING_FORMS_NOT_PROPORTIONAL,
                    f"equal degrees {d1} with non-proportional leading forms",
                )
            # reduce the component stripped last, so that at reassembly the
            # fix's inverse sits directly below that strip's shears
            if last_stripped != "p":
                q = q - p.scale(c)
                steps.append(("y", Poly.monomial(c, 1, 0)))
            else:
                p = p - q.scale(1 / c)
                steps.append(("x", Poly.monomial(1 / c, 0, 1)))
            continue
        big_is_p = d1 > d2
        big, small = (p, q) if big_is_p else (q, p)
        d_big, d_small = (d1, d2) if big_is_p else (d2, d1)
        if d_small < 1 or d_big % d_small != 0:
            raise NotAutomorphism(
                DEGREE_NOT_DIVISIBLE,
                f"component degrees {d1} and {d2}",
            )
        exp = d_big // d_small
        c = _proportionality(leading_form(small) ** exp, leading_form(big))
        if c is None:
            raise NotAutomorphism(
                LEADING_FORMS_NOT_PROPORTIONAL,
                f"degree-{d_big} leading form is not proportional to the "
                f"{exp}-th power of the degree-{d_small} one",
            )
        reduced = big - (small ** exp).scale(c)
        if big_is_p:
            p = reduced
            steps.append(("x", Poly.monomial(c, 0, exp)))
            last_stripped = "p"
        else:
            q = reduced
            steps.append(("y", Poly.monomial(c, exp, 0)))
            last_stripped = "q"
    return steps, _extract_affine(p, q)


def _linear_shear_affine(axis: str, f: Poly) -> AffineMap:
    """The affine map (x, y + f(x)) or (x + f(y), y) for f of degree <= 1."""
    c1 = f.terms.get((1, 0) if axis == "y" else (0, 1), QQ(0))
    c0 = f.terms.get((0, 0), QQ(0))
    if axis == "y":
        return AffineMap(((1, 0), (c1, 1)), (0, c0))
    return AffineMap(((1, c1), (0, 1)), (c0, 0))


def _assemble(steps: List[_Step], base: AffineMap) -> NormalForm:
    # Replay inverted steps in reverse emission order on top of the base
    # affine.  Strict shears of one strip arrive contiguously and merge;
    # each linear fix arrives immediately before (below) the same-axis
    # strip it belongs to and merges into its shear.
    triangulars: List[ElementaryMap] = []
    pending: Optional[_Step] = None  # linear fix waiting for its strip
    for axis, sub in reversed(steps):
        if total_deg(sub) == 1:
            assert pending is None, "consecutive linear fixes cannot occur"
            pending = (axis, sub)
            continue
        f = sub
        if pending is not None:
            p_axis, p_sub = pending
            assert p_axis == axis, "fix orientation must match the next strip"
            f = f + p_sub
            pending = None
        if triangulars and triangulars[-1].axis == axis:
            merged = triangulars[-1].f + f
            triangulars[-1] = ElementaryMap(axis, merged)
        else:
            triangulars.append(ElementaryMap(axis, f))
    if pending is not None:
        l2 = _linear_shear_affine(*pending)
    else:
        l2 = AffineMap.identity()
    return NormalForm(base, tuple(triangulars), l2)


@lru_cache(maxsize=256)
def _decompose_cached(m: PolyMap, _degree_limit: int) -> NormalForm:
    steps, base = _reduce(m)
    return _assemble(steps, base)


def decompose(m: PolyMap) -> NormalForm:
    """Normal form of m, or NotAutomorphism if m is provably not invertible.

    On success the normal form recomposes to m exactly.  Results are
    memoized (keyed on the map and the active degree limit), so inverting
    a freshly decomposed map does not repeat the reduction.
    """
    return _decompose_cached(m, get_max_total_degree())


def length(m: PolyMap) -> int:
    """The unique number of degree >= 2 shears in the normal form of m."""
    return decompose(m).length


def normalize_word(word) -> NormalForm:
    """Normal form of the composite of a generator word.

    Merges adjacent same-axis shears, absorbs linear shears and affine
    factors into the flanking affines, and drops cancelled shears.
    """
    return decompose(evaluate_word(word))


def invert_map(m: PolyMap) -> PolyMap:
    """Exact inverse of an automorphism (NotAutomorphism otherwise)."""
    nf = decompose(m)
    return evaluate_word(invert_word(nf.to_word()))
