"""Carlitz cyclotomic polynomials Psi_m(x) in A[x] and their values Psi_m(u) in A.

Psi_m is never built from torsion points; both routes below are exact divisions justified by
C_m(x) = prod_{b | m monic} Psi_b(x):

* ``cyclotomic_poly`` divides C_m(x) by the product of Psi_b(x) over proper divisors in A[x];
* the value route does the same division with x = u already substituted, which is the only
  feasible option once deg m >= 4 (C_m(x) has x-degree q^deg(m)).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .carlitz import carlitz_coeffs, carlitz_eval
from .errors import DomainError
from .ffield import FieldSpec
from .polyring import Poly, factorize

__all__ = ["XPoly", "cyclotomic_poly", "cyclotomic_eval", "CUTOVER_DEGREE"]

CUTOVER_DEGREE = 4


@dataclass(frozen=True)
class XPoly:
    """Polynomial in x with coefficients in A; ``coeffs[k]`` multiplies x^k."""

    field: FieldSpec
    coeffs: tuple[Poly, ...]

    @classmethod
    def make(cls, field: FieldSpec, coeffs) -> XPoly:
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return cls(field, tuple(coeffs))

    @classmethod
    def x(cls, field: FieldSpec) -> XPoly:
        return cls(field, (Poly.zero(field), Poly.one(field)))

    @classmethod
    def constant(cls, c: Poly) -> XPoly:
        return cls.make(c.field, [c])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def _zero(self):
        return Poly.zero(self.field)

    def __add__(self, other: XPoly) -> XPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        z = self._zero()
        return XPoly.make(self.field, [
            (self.coeffs[i] if i < len(self.coeffs) else z) + (other.coeffs[i] if i < len(other.coeffs) else z)
            for i in range(n)])

    def __sub__(self, other: XPoly) -> XPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        z = self._zero()
        return XPoly.make(self.field, [
            (self.coeffs[i] if i < len(self.coeffs) else z) - (other.coeffs[i] if i < len(other.coeffs) else z)
            for i in range(n)])

    def __mul__(self, other) -> XPoly:
        if isinstance(other, Poly):
            return XPoly.make(self.field, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return XPoly(self.field, ())
        out = [self._zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return XPoly.make(self.field, out)

    def divmod_monic(self, other: XPoly) -> tuple[XPoly, XPoly]:
        """Division by an x-monic divisor, which needs no inverses in A."""
        if not other.coeffs or not other.coeffs[-1].is_one():
            raise DomainError("divisor must be monic in x")
        nb = len(other.coeffs)
        r = list(self.coeffs)
        if len(r) < nb:
            return XPoly(self.field, ()), self
        q = [self._zero()] * (len(r) - nb + 1)
        for i in range(len(r) - nb, -1, -1):
            c = r[i + nb - 1]
            if c:
                q[i] = c
                for j, b in enumerate(other.coeffs):
                    if b:
                        r[i + j] = r[i + j] - c * b
        return XPoly.make(self.field, q), XPoly.make(self.field, r[: nb - 1])

    def exact_div(self, other: XPoly) -> XPoly:
        q, r = self.divmod_monic(other)
        if r.coeffs:
            raise ArithmeticError("inexact division in A[x]")
        return q

    def evaluate(self, u: Poly) -> Poly:
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def compose(self, inner: XPoly) -> XPoly:
        """self(inner(x))."""
        acc = XPoly(self.field, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + XPoly.constant(c)
        return acc

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if k == 0:
                terms.append(cs)
                continue
            mono = "x" if k == 1 else f"x^{k}"
            if c.is_one():
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if len(c.coeffs) > 1 or "+" in cs else f"{cs}*{mono}")
        return "+".join(terms) if terms else "0"


def carlitz_xpoly(m: Poly) -> XPoly:
    """C_m(x) as an XPoly."""
    F = m.field
    coeffs = [Poly.zero(F)] * (F.q ** m.deg + 1)
    for i, c in enumerate(carlitz_coeffs(m).coeffs):
        coeffs[F.q ** i] = c
    return XPoly.make(F, coeffs)


def _divisor_lattice(m: Poly):
    """Monic divisors of m as (exponent vector, poly), ordered so divisors precede multiples."""
    fac = factorize(m).factors
    vecs = [()]
    for _, e in fac:
        vecs = [v + (k,) for v in vecs for k in range(e + 1)]
    vecs.sort(key=sum)
    out = []
    for v in vecs:
        d = Poly.one(m.field)
        for (prime, _), k in zip(fac, v):
            if k:
                d = d * prime ** k
        out.append((v, d))
    return out


def _proper_divisors(v, lattice):
    return [d for w, d in lattice if w != v and all(a <= b for a, b in zip(w, v))]


def _check_modulus(m: Poly):
    if not m.is_monic() or m.deg < 1:
        raise DomainError("cyclotomic polynomials need a monic m of positive degree")


@functools.lru_cache(maxsize=1024)
def cyclotomic_poly(m: Poly) -> XPoly:
    """Psi_m(x) = C_m(x) / prod_{b | m, b != m} Psi_b(x)."""
    _check_modulus(m)
    lattice = _divisor_lattice(m)
    v = lattice[-1][0]
    denom = XPoly.x(m.field)  # Psi_1(x) = C_1(x) = x
    for b in _proper_divisors(v, lattice):
        if b.deg >= 1:
            denom = denom * cyclotomic_poly(b)
    return carlitz_xpoly(m).exact_div(denom)


def _eval_by_values(m: Poly, u: Poly) -> Poly:
    lattice = _divisor_lattice(m)
    psi: dict = {}
    for v, b in lattice:
        if b.deg < 1:
            continue
        denom = u  # Psi_1(u) = C_1(u) = u
        for d in _proper_divisors(v, lattice):
            if d.deg >= 1:
                denom = denom * psi[d]
        psi[b] = carlitz_eval(b, u).exact_div(denom)
    return psi[m]


def cyclotomic_eval(m: Poly, u: Poly, method: str | None = None) -> Poly:
    """Psi_m(u).  ``method`` is "poly", "values", or None for the degree-based default."""
    _check_modulus(m)
    if not u:
        raise DomainError("Psi_m(0) = 0 carries no information; u must be nonzero")
    if m.field.q == 2:
        raise DomainError("q = 2 is outside the supported range (q > 2 required)")
    if method is None:
        method = "values" if m.deg >= CUTOVER_DEGREE else "poly"
    if method == "poly":
        return cyclotomic_poly(m).evaluate(u)
    if method == "values":
        return _eval_by_values(m, u)
    raise ValueError(f"unknown method {method!r}")
