"""Exact rational coefficients.

Uses gmpy2.mpq when available (much faster big-rational arithmetic),
falling back to fractions.Fraction.  Both are always stored in lowest
terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

ZERO = QQ(0)
ONE = QQ(1)


def rat(num, den=None):
    """Build a rational from ints, a string like "3" or "-1/2", or another rational."""
    if den is not None:
        return QQ(num, den)
    if isinstance(num, str):
        if "/" in num:
            p, q = num.split("/", 1)
            return QQ(int(p), int(q))
        return QQ(int(num))
    return QQ(num)


def rat_str(value) -> str:
    """Render a rational as "p" or "p/q" (lowest terms, q > 0)."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
