"""Text grammar for bivariate polynomials.

    poly   := ['-'] term (('+'|'-') term)*
    term   := coef ['*' monos | monos] | monos
    coef   := nat | nat '/' nat
    monos  := mono (['*'] mono)*
    mono   := ('x'|'y') ['^' nat]

Whitespace is ignored everywhere.  Implicit multiplication is allowed
between the coefficient and the monomials and between monomials, e.g.
"3x^2y" means 3*x^2*y.  '^' binds tighter than '*'.

format_poly is deterministic (graded-lexicographic descending term order)
and parse_poly(format_poly(h)) == h for every h.
"""

from __future__ import annotations

from .poly import Poly
from .rationals import QQ, rat_str


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NegativeExponentError(ParseError):
    """A caret was not followed by a natural number."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, cls=ParseError):
        raise cls(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def poly(self) -> Poly:
        negative = False
        if self.peek() == "-":
            self.take()
            negative = True
        result = self.term(negative)
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                result = result + self.term(False)
            elif ch == "-":
                self.take()
                result = result + self.term(True)
            elif ch == "":
                return result
            else:
                self.error(f"unexpected character {ch!r}")

    def term(self, negative: bool) -> Poly:
        ch = self.peek()
        coef = QQ(1)
        have_coef = False
        if ch.isdigit():
            num = self.nat()
            coef = QQ(num)
            have_coef = True
            if self.peek() == "/":
                self.take()
                den = self.nat()
                if den == 0:
                    self.error("zero denominator")
                coef = QQ(num, den)
            if self.peek() == "*":
                # may precede monomials; "3*" alone is an error caught below
                self.take()
                a, b = self.monos()
            elif self.peek() in ("x", "y"):
                a, b = self.monos()
            else:
                a, b = 0, 0
        else:
            a, b = self.monos()
        if negative:
            coef = -coef
        if not have_coef and a == 0 and b == 0:
            self.error("expected a term")
        return Poly.monomial(coef, a, b)

    def monos(self):
        a, b = self.mono()
        while True:
            ch = self.peek()
            if ch == "*":
                save = self.pos
                self.take()
                if self.peek() not in ("x", "y"):
                    self.pos = save
                    break
                da, db = self.mono()
            elif ch in ("x", "y"):
                da, db = self.mono()
            else:
                break
            a, b = a + da, b + db
        return a, b

    def mono(self):
        ch = self.peek()
        if ch not in ("x", "y"):
            self.error("expected 'x' or 'y'")
        self.take()
        exp = 1
        if self.peek() == "^":
            self.take()
            if not self.peek().isdigit():
                self.error("exponent must be a natural number", NegativeExponentError)
            exp = self.nat()
        return (exp, 0) if ch == "x" else (0, exp)


def parse_poly(text: str) -> Poly:
    parser = _Parser(text)
    result = parser.poly()
    return result


def _format_monomial(a: int, b: int) -> str:
    parts = []
    if a == 1:
        parts.append("x")
    elif a > 1:
        parts.append(f"x^{a}")
    if b == 1:
        parts.append("y")
    elif b > 1:
        parts.append(f"y^{b}")
    return "*".join(parts)


def format_poly(h: Poly) -> str:
    """Deterministic rendering: total degree descending, then x-exponent descending."""
    if not h.terms:
        return "0"
    keys = sorted(h.terms, key=lambda e: (-(e[0] + e[1]), -e[0]))
    pieces = []
    for i, e in enumerate(keys):
        c = h.terms[e]
        mono = _format_monomial(*e)
        mag = rat_str(c if c > 0 else -c)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
