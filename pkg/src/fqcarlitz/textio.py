"""Text grammar for field elements and polynomials.

Printing is canonical: terms in decreasing degree, zero terms dropped, coefficient 1 and
exponent 1 omitted, and extension-field coefficients with more than one term parenthesized,
e.g. ``(w+1)*T^2+w``.  The parser is more permissive: it accepts any sum/product/power
expression in ``T`` and ``w`` (``*`` may be left out), so factored forms such as
``(T-1)*T^2`` parse too.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .ffield import FieldElement, FieldSpec, format_element
from .polyring import Poly

__all__ = ["parse_poly", "parse_element", "format_poly"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok and not tok.isspace():
            tokens.append(tok)
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field
        if not self.tokens:
            raise ParseError("empty expression")

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Poly:
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()!r}")
        return out

    def expr(self) -> Poly:
        negate = False
        if self.peek() in ("+", "-"):
            negate = self.take() == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                acc = acc * self.power()
            elif tok is not None and (tok == "(" or tok.isdigit() or tok[0].isalpha()):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer, got {tok!r}")
            return base ** int(tok)
        return base

    def atom(self) -> Poly:
        tok = self.take()
        F = self.field
        if tok is None:
            raise ParseError("unexpected end of expression")
        if tok.isdigit():
            n = int(tok)
            if n >= F.p:
                raise ParseError(f"coefficient {n} is not in F_{F.p}")
            return Poly.constant(F, n)
        if tok == "T":
            return Poly.T(F)
        if tok == "w":
            if F.s == 1:
                raise ParseError(f"symbol 'w' is meaningless in the prime field F_{F.p}")
            return Poly.constant(F, F.p)
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseError("unbalanced parenthesis")
            return inner
        raise ParseError(f"unknown symbol {tok!r}")


def parse_poly(text: str, field: FieldSpec) -> Poly:
    """Parse a polynomial in T (coefficients may involve w for extension fields)."""
    return _Parser(text, field).parse()


def parse_element(text: str, field: FieldSpec) -> FieldElement:
    f = parse_poly(text, field)
    if f.deg > 0:
        raise ParseError(f"{text!r} is not a field element")
    return FieldElement(field, f.coeffs[0] if f.coeffs else 0)


def _coeff_str(c: int, field: FieldSpec) -> str:
    s = format_element(c, field)
    return f"({s})" if "+" in s else s


def format_poly(f: Poly, var: str = "T") -> str:
    F = f.field
    terms = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(format_element(c, F))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{_coeff_str(c, F)}*{mono}")
    return "+".join(terms) if terms else "0"
