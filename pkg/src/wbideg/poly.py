"""Sparse bivariate polynomials over the rationals, with weighted degrees.

A polynomial is a finite map from exponent pairs (a, b) -- the powers of x
and y -- to nonzero rational coefficients.  Zero coefficients are never
stored, so two polynomials are equal iff their term maps are equal.

  x^2*y + 3  ->  {(2, 1): 1, (0, 0): 3}

The zero polynomial has an empty term map.  Its weighted degree is the
distinguished value NEG_INF, which sorts below every integer, so the
valuation law wdeg(h*g) = wdeg(h) + wdeg(g) and the subadditivity bound
wdeg(h+g) <= max(wdeg h, wdeg g) hold without special cases.

Compositions multiply total degrees, so a global degree guard (default
4096) aborts runaway expansions with DegreeOverflow.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Tuple, Union

from .rationals import QQ, ZERO, rat

Exponent = Tuple[int, int]
Weight = Tuple[int, int]

# Weighted degree of the zero polynomial.  float('-inf') compares and adds
# correctly against ints, which is all we need.
NEG_INF = float("-inf")
WDeg = Union[int, float]

DEFAULT_MAX_TOTAL_DEGREE = 4096
_max_total_degree = DEFAULT_MAX_TOTAL_DEGREE


class DegreeOverflow(Exception):
    """Raised when an operation would exceed the configured total-degree limit."""


class ZeroPolynomialError(ValueError):
    """Raised by operations that are undefined on the zero polynomial."""


def set_max_total_degree(limit: int) -> None:
    """Set the global total-degree guard (see DegreeOverflow)."""
    global _max_total_degree
    if limit < 1:
        raise ValueError("degree limit must be positive")
    _max_total_degree = limit


def get_max_total_degree() -> int:
    return _max_total_degree


def check_weight(w: Weight) -> Weight:
    w1, w2 = w
    if not (isinstance(w1, int) and isinstance(w2, int) and w1 >= 1 and w2 >= 1):
        raise ValueError(f"weight components must be positive integers, got {w!r}")
    return (w1, w2)


class Poly:
    """Immutable sparse bivariate polynomial over the rationals."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, object]] = None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                c = QQ(c)
                if c != 0:
                    if a < 0 or b < 0:
                        raise ValueError(f"negative exponent in term {(a, b)}")
                    clean[(a, b)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c) -> "Poly":
        return Poly({(0, 0): rat(c)})

    @staticmethod
    def monomial(c, a: int, b: int) -> "Poly":
        return Poly({(a, b): rat(c)})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .grammar import format_poly

        return f"Poly({format_poly(self)!r})"

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "Poly":
        out = Poly()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e, ZERO) + c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
        out = Poly()
        out.terms = acc
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly()
        da = total_deg(self)
        db = total_deg(other)
        if da + db > _max_total_degree:
            raise DegreeOverflow(
                f"product degree {da + db} exceeds limit {_max_total_degree}"
            )
        # exponent pairs packed into single ints: the degree guard keeps
        # both components well below 2**16, so packed sums never carry
        left = [((a << 16) | b, c) for (a, b), c in self.terms.items()]
        if other is self:
            acc = _square_packed(left)
        else:
            right = [((a << 16) | b, c) for (a, b), c in other.terms.items()]
            if len(left) > len(right):
                left, right = right, left
            acc = {}
            get = acc.get
            for e1, c1 in left:
                for e2, c2 in right:
                    e = e1 + e2
                    prev = get(e)
                    acc[e] = c1 * c2 if prev is None else prev + c1 * c2
        out = Poly()
        out.terms = {
            (e >> 16, e & 0xFFFF): c for e, c in acc.items() if c != 0
        }
        return out

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        # binary exponentiation; composition chains use moderate exponents
        # but the bases can be large
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        c = QQ(c)
        if c == 0:
            return Poly()
        out = Poly()
        out.terms = {e: coef * c for e, coef in self.terms.items()}
        return out

    def substitute(self, images: Tuple["Poly", "Poly"]) -> "Poly":
        """Simultaneously substitute x -> images[0], y -> images[1]."""
        px, py = images
        if not self.terms:
            return Poly()
        x_pows = _PowerCache(px)
        y_pows = _PowerCache(py)
        acc = {}
        get = acc.get
        for (a, b), c in self.terms.items():
            for e, coef in (x_pows[a] * y_pows[b]).terms.items():
                prev = get(e)
                s = c * coef if prev is None else prev + c * coef
                if s == 0:
                    del acc[e]
                else:
                    acc[e] = s
        out = Poly()
        out.terms = acc
        return out


class _PowerCache:
    """Powers of a fixed polynomial, computed by squaring and memoized.

    Substitution only needs the powers that actually occur as exponents,
    which matters when the base is a large composite.
    """

    def __init__(self, base: Poly):
        self._pows = {0: Poly.const(1), 1: base}

    def __getitem__(self, n: int) -> Poly:
        cached = self._pows.get(n)
        if cached is None:
            half = self[n // 2]
            cached = half * half
            if n & 1:
                cached = cached * self._pows[1]
            self._pows[n] = cached
        return cached


def _square_packed(items) -> dict:
    # (sum c_i t_i)^2 = sum c_i^2 t_i^2 + 2 sum_{i<j} c_i c_j t_i t_j
    acc = {}
    get = acc.get
    for i, (e1, c1) in enumerate(items):
        e = e1 + e1
        prev = get(e)
        acc[e] = c1 * c1 if prev is None else prev + c1 * c1
        c2x = c1 + c1
        for e2, c2 in items[i + 1:]:
            e = e1 + e2
            prev = get(e)
            acc[e] = c2x * c2 if prev is None else prev + c2x * c2
    return acc


# -- variables --------------------------------------------------------

X = Poly.monomial(1, 1, 0)
Y = Poly.monomial(1, 0, 1)


# -- degrees ----------------------------------------------------------


def wdeg(h: Poly, w: Weight) -> WDeg:
    """Weighted degree: max of a*w1 + b*w2 over stored terms, NEG_INF if h = 0."""
    w1, w2 = w
    if not h.terms:
        return NEG_INF
    return max(a * w1 + b * w2 for a, b in h.terms)


def total_deg(h: Poly) -> WDeg:
    """Total degree, i.e. wdeg with weight (1, 1)."""
    if not h.terms:
        return NEG_INF
    return max(a + b for a, b in h.terms)


def leading_form(h: Poly, weight: Optional[Weight] = None) -> Poly:
    """Sum of the terms of top (total or weighted) degree.

    With weight=None the grading is the total degree.  Undefined on the
    zero polynomial.
    """
    if not h.terms:
        raise ZeroPolynomialError("leading form of the zero polynomial")
    w = weight if weight is not None else (1, 1)
    w1, w2 = w
    top = max(a * w1 + b * w2 for a, b in h.terms)
    out = Poly()
    out.terms = {
        (a, b): c for (a, b), c in h.terms.items() if a * w1 + b * w2 == top
    }
    return out
