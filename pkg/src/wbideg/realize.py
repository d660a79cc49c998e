"""Explicit automorphisms realizing any achievable weighted bidegree.

For every member d of Z(w) this constructs a short generator word whose
composite has weighted bidegree exactly d.  The construction mirrors the
membership witness: the exceptional triple is realized by affine maps,
the lattice branches by one or two monomial shears (plus an affine twist
when the components must come out in the other order).

For w1 > w2 the problem is conjugated by the coordinate swap: a word
realizing (d2, d1) under (w2, w1), wrapped in swaps, realizes (d1, d2)
under (w1, w2), since swapping both the variables and the weights leaves
all weighted degrees unchanged.
"""

from __future__ import annotations

from typing import List

from .bidegree import member
from .maps import AffineMap, ElementaryMap, Factor
from .poly import Poly, Weight


class NotRealizable(Exception):
    """The requested bidegree is not a member of Z(w)."""


def _y_shear(exp: int, coeff=1) -> ElementaryMap:
    return ElementaryMap("y", Poly.monomial(coeff, exp, 0))


def _x_shear(exp: int, coeff=1) -> ElementaryMap:
    return ElementaryMap("x", Poly.monomial(coeff, 0, exp))


def _affine_x_plus_y() -> AffineMap:
    return AffineMap(((1, 1), (0, 1)))  # (x + y, y)


def _affine_y_plus_x() -> AffineMap:
    return AffineMap(((1, 0), (1, 1)))  # (x, y + x)


def _exceptional(w: Weight, d) -> List[Factor]:
    w1, w2 = w
    wt = max(w1, w2)
    if d == (w1, w2):
        return []
    if d == (w2, w1):
        return [AffineMap.swap()]
    # d == (wt, wt): the component carrying the smaller weight gets the sum
    if w1 <= w2:
        return [_affine_x_plus_y()]
    return [_affine_y_plus_x()]


def _max_lattice(w: Weight, d) -> List[Factor]:
    # d in (u N+)^2 for u = max weight; both components are then >= wt.
    a, b = w  # a <= b, u = b
    d1, d2 = d
    u = b
    if d1 < d2:
        # first component from an x-shear of weighted degree d1, second on top
        t1 = _x_shear(d1 // u) if d1 // u >= 2 else AffineMap(((1, 1), (0, 1)))
        return [t1, _y_shear(d2 // d1)]
    if d1 > d2:
        prefix: List[Factor] = [AffineMap.swap()] if a < b else []
        t1 = _y_shear(d2 // u) if d2 // u >= 2 else AffineMap(((1, 0), (1, 1)))
        return prefix + [t1, _x_shear(d1 // d2)]
    # d1 == d2 > u (d1 == u is the exceptional (wt, wt))
    return [_x_shear(d1 // u), _affine_y_plus_x()]


def _min_lattice(w: Weight, d) -> List[Factor]:
    # d in (a N+)^2 for the strictly smaller weight a.
    a, b = w  # a < b
    d1, d2 = d
    if min(d1, d2) >= b:
        # both components at least the larger weight: two shears
        if d1 > d2:
            return [_y_shear(d2 // a), _x_shear(d1 // d2)]
        if d1 < d2:
            # realize (d2, d1) and swap the components on top
            return [_y_shear(d1 // a), _x_shear(d2 // d1), AffineMap.swap()]
        return [_y_shear(d1 // a), _affine_x_plus_y()]
    # min(d1, d2) == a < b: a single shear (plus a swap when the small
    # component comes first in the other order)
    if d1 < d2:
        return [_y_shear(d2 // a)]
    return [_y_shear(d1 // a), AffineMap.swap()]


def _realize_ordered(w: Weight, d, branch_base: int) -> List[Factor]:
    # requires w1 <= w2
    if branch_base == max(w):
        return _max_lattice(w, d)
    return _min_lattice(w, d)


def realize(w: Weight, d) -> List[Factor]:
    """Generator word realizing d under w, or NotRealizable if d is not in Z(w)."""
    witness = member(w, d)
    if not witness.is_member:
        raise NotRealizable(f"{d} is not an achievable weighted bidegree for {w}")
    w1, w2 = w
    d1, d2 = d
    if witness.branch == "exceptional":
        return _exceptional(w, d)
    base = w1 if witness.branch == "w1" else w2
    if w1 <= w2:
        return _realize_ordered(w, d, base)
    swap = AffineMap.swap()
    inner = _realize_ordered((w2, w1), (d2, d1), base)
    return [swap, *inner, swap]
