"""Polynomial input parsing and rendering.

Accepted forms:

* expanded or factored expressions: "x^3 - 2*x + 1", "(x-1)^2*(x+2)",
  with integer or rational literals, `i` for the imaginary unit and `^`
  or `**` for powers;
* JSON: {"coeffs": [[re_num, re_den, im_num, im_den], ...]}, lowest
  degree first.

All-rational literals give an ExactPoly. A decimal literal anywhere switches
the result to a NumericPoly at the configured precision (the decimal itself
is read exactly, the coefficients are then rounded once).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .balls import CBall
from .errors import ParseError
from .gaussian import GR_ONE, GaussianRational
from .poly import ExactPoly, NumericPoly

_TOKEN_KINDS = ("number", "name", "op", "end")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int
    value: Fraction | None = None
    decimal: bool = False


def _tokenize(text: str) -> list[_Token]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            start = i
            seen_dot = False
            while i < n and (text[i].isdigit() or (text[i] == "." and not seen_dot)):
                if text[i] == ".":
                    seen_dot = True
                i += 1
            lit = text[start:i]
            try:
                value = Fraction(lit)
            except ValueError:
                raise ParseError(f"bad numeric literal {lit!r}", start)
            out.append(_Token("number", lit, start, value, seen_dot))
            continue
        if c.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            out.append(_Token("name", text[start:i], start))
            continue
        if c == "*" and i + 1 < n and text[i + 1] == "*":
            out.append(_Token("op", "^", i))
            i += 2
            continue
        if c in "+-*/^()":
            out.append(_Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    """Recursive descent over polynomial values with exact coefficients."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.idx = 0
        self.saw_decimal = False

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def take(self) -> _Token:
        t = self.tokens[self.idx]
        self.idx += 1
        return t

    def expect_op(self, op: str) -> None:
        t = self.take()
        if t.kind != "op" or t.text != op:
            raise ParseError(f"expected {op!r}", t.pos)

    def parse(self) -> ExactPoly:
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
        return p

    def expr(self) -> ExactPoly:
        t = self.peek()
        negate = False
        if t.kind == "op" and t.text in "+-":
            self.take()
            negate = t.text == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                rhs = self.term()
                acc = acc - rhs if t.text == "-" else acc + rhs
            else:
                return acc

    def term(self) -> ExactPoly:
        acc = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                acc = acc * self.factor()
            elif t.kind == "op" and t.text == "/":
                self.take()
                pos = self.peek().pos
                divisor = self.factor()
                if divisor.is_zero:
                    raise ParseError("division by zero", pos)
                if divisor.degree > 0:
                    raise ParseError("division by a non-constant polynomial", pos)
                acc = acc.scale(GR_ONE / divisor.coeff(0))
            elif t.kind == "name" or (t.kind == "op" and t.text == "("):
                # implicit multiplication: 2x, 3(x-1), x(x+2); two adjacent
                # number literals stay a syntax error
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> ExactPoly:
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e = self.exponent()
            acc = ExactPoly.constant(1)
            for _ in range(e):
                acc = acc * base
            return acc
        return base

    def exponent(self) -> int:
        t = self.take()
        neg = False
        if t.kind == "op" and t.text in "+-":
            neg = t.text == "-"
            t = self.take()
        if t.kind != "number" or t.decimal or t.value.denominator != 1:
            raise ParseError("exponent must be an integer literal", t.pos)
        if neg:
            raise ParseError("negative exponents are not polynomial", t.pos)
        return int(t.value)

    def atom(self) -> ExactPoly:
        t = self.take()
        if t.kind == "number":
            if t.decimal:
                self.saw_decimal = True
            return ExactPoly.constant(GaussianRational(t.value, Fraction(0)))
        if t.kind == "name":
            name = t.text.lower()
            if name == "x":
                return ExactPoly.x()
            if name == "i":
                return ExactPoly.constant(GaussianRational(Fraction(0), Fraction(1)))
            raise ParseError(f"unknown name {t.text!r}", t.pos)
        if t.kind == "op" and t.text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if t.kind == "op" and t.text in "+-":
            inner = self.factor()
            return -inner if t.text == "-" else inner
        raise ParseError(f"unexpected token {t.text!r}", t.pos)


def _poly_from_json(data, precision: int) -> ExactPoly | NumericPoly:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ParseError('polynomial JSON must be an object with a "coeffs" key')
    coeffs = []
    for idx, entry in enumerate(data["coeffs"]):
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(
                f"coefficient {idx} must be [re_num, re_den, im_num, im_den]"
            )
        ren, red, imn, imd = entry
        if red == 0 or imd == 0:
            raise ParseError(f"coefficient {idx} has a zero denominator")
        coeffs.append(GaussianRational(Fraction(ren, red), Fraction(imn, imd)))
    p = ExactPoly.from_coeffs(coeffs)
    return p


def parse_polynomial(text: str, precision: int = 128) -> ExactPoly | NumericPoly:
    """Parse expanded, factored or JSON coefficient input.

    Exact output whenever every literal is rational; any decimal literal
    switches to numeric mode at `precision` bits.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"polynomial JSON is malformed: {exc.msg}", exc.pos)
        return _poly_from_json(data, precision)
    parser = _Parser(stripped)
    p = parser.parse()
    if parser.saw_decimal:
        return to_numeric(p, precision)
    return p


def to_numeric(p: ExactPoly, precision: int) -> NumericPoly:
    """Round exact coefficients once, at `precision` bits."""
    if p.is_zero:
        raise ParseError("the zero polynomial has no numeric form")
    with mp.workprec(precision):
        coeffs = tuple(CBall.from_gaussian(c).mid for c in p.coeffs)
    return NumericPoly(coeffs, precision)


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coeff_str(c: GaussianRational) -> str:
    if c.im == 0:
        q = c.re
        if q < 0:
            return f"({_frac_str(q)})"
        return _frac_str(q)
    re_part = _frac_str(c.re)
    im_sign = "+" if c.im >= 0 else "-"
    im_part = _frac_str(abs(c.im))
    return f"({re_part}{im_sign}{im_part}*i)"


def render_exact_poly(p: ExactPoly) -> str:
    """Canonical text form, reparseable to the identical polynomial."""
    if p.is_zero:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c.is_zero:
            continue
        if k == 0:
            terms.append(_coeff_str(c))
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            if c == GR_ONE:
                terms.append(xpow)
            else:
                terms.append(f"{_coeff_str(c)}*{xpow}")
    return " + ".join(terms)


def poly_to_json(p: ExactPoly) -> dict:
    return {
        "coeffs": [
            [
                c.re.numerator,
                c.re.denominator,
                c.im.numerator,
                c.im.denominator,
            ]
            for c in p.coeffs
        ]
    }
