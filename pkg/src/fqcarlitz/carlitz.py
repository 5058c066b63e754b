"""The Carlitz module C: A -> A{tau}, C_T = T + tau, tau(x) = x^q.

C_m(x) = sum_i [m, i] x^(q^i).  Everything here leans on one fact: for a in A the q-th power
is the semilinear map sum c_i T^i -> sum c_i T^(iq), so no general powering is ever needed.
"""
from __future__ import annotations

import functools
import threading
from dataclasses import dataclass

from .errors import DomainError
from .ffield import FieldSpec
from .polyring import Poly, _add, _scale

__all__ = [
    "CarlitzCoeffs",
    "carlitz_coeffs",
    "carlitz_eval",
    "carlitz_eval_coeffs",
    "carlitz_eval_mod",
    "carlitz_tpower_values",
]


@dataclass(frozen=True)
class CarlitzCoeffs:
    m: Poly
    coeffs: tuple[Poly, ...]

    def __getitem__(self, i: int) -> Poly:
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "x" if i == 0 else f"x^{c.field.q ** i}"
            terms.append(mono if c.is_one() else f"({c})*{mono}")
        return "+".join(reversed(terms)) or "0"


_tpower_lock = threading.Lock()
_tpower_cache: dict[FieldSpec, list[tuple[Poly, ...]]] = {}


def _tpower_coeffs(field: FieldSpec, k: int) -> list[tuple[Poly, ...]]:
    """Coefficient vectors of C_{T^j} for j <= k (cached per field, append-only)."""
    with _tpower_lock:
        table = _tpower_cache.setdefault(field, [(Poly.one(field),)])
        T = Poly.T(field)
        while len(table) <= k:
            prev = table[-1]
            nxt = []
            for i in range(len(prev) + 1):
                c = T * prev[i] if i < len(prev) else Poly.zero(field)
                if i > 0:
                    c = c + prev[i - 1].frobenius()
                nxt.append(c)
            table.append(tuple(nxt))
        return table[: k + 1]


def carlitz_coeffs(m: Poly) -> CarlitzCoeffs:
    """[m, 0], ..., [m, deg m] via C_{Ta} = T C_a + tau C_a and F_q-linearity in m."""
    if not m:
        raise DomainError("C_0 is the zero map and has no coefficient vector")
    F = m.field
    d = m.deg
    acc = [()] * (d + 1)
    for j, cj in enumerate(m.coeffs):
        if not cj:
            continue
        for i, poly in enumerate(_tpower_coeffs(F, j)[j]):
            acc[i] = _add(acc[i], _scale(poly.coeffs, cj, F), F)
    return CarlitzCoeffs(m, tuple(Poly._raw(F, c) for c in acc))


def carlitz_tpower_values(u: Poly, k: int, modulus: Poly | None = None) -> list[Poly]:
    """[C_{T^0}(u), ..., C_{T^k}(u)], optionally reduced mod `modulus` at every step."""
    T = Poly.T(u.field)
    v = u if modulus is None else u % modulus
    out = [v]
    for _ in range(k):
        v = T * v + v.frobenius()
        if modulus is not None:
            v = v % modulus
        out.append(v)
    return out


@functools.lru_cache(maxsize=4096)
def _tpower_values_cached(u: Poly, k: int) -> tuple[Poly, ...]:
    if k == 0:
        return (u,)
    prev = _tpower_values_cached(u, k - 1)
    v = prev[-1]
    return prev + (Poly.T(u.field) * v + v.frobenius(),)


def _combine(m: Poly, values) -> Poly:
    F = m.field
    acc = ()
    for j, cj in enumerate(m.coeffs):
        if cj:
            acc = _add(acc, _scale(values[j].coeffs, cj, F), F)
    return Poly._raw(F, acc)


def carlitz_eval(m: Poly, u: Poly) -> Poly:
    """Exact C_m(u).  C_0 and C_m(0) are 0."""
    if not m or not u:
        return Poly.zero(u.field)
    return _combine(m, _tpower_values_cached(u, m.deg))


def carlitz_eval_coeffs(m: Poly, u: Poly) -> Poly:
    """C_m(u) = sum [m, i] u^(q^i), through the coefficient vector."""
    if not m or not u:
        return Poly.zero(u.field)
    out = Poly.zero(u.field)
    power = u
    for i, c in enumerate(carlitz_coeffs(m).coeffs):
        if i:
            power = power.frobenius()
        out = out + c * power
    return out


def carlitz_eval_mod(m: Poly, u: Poly, modulus: Poly) -> Poly:
    """C_m(u) mod `modulus`, never expanding C_m(u)."""
    if not modulus or modulus.deg < 1:
        raise DomainError("modulus must have positive degree")
    if not m or not u:
        return Poly.zero(u.field)
    return _combine(m, carlitz_tpower_values(u, m.deg, modulus)) % modulus
