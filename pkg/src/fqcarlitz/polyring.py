"""The polynomial ring A = F_q[T].

A :class:`Poly` is an immutable, hashable dense coefficient tuple (lowest degree first, no
trailing zeros) over a :class:`~fqcarlitz.ffield.FieldSpec`.  Coefficients are the int
encodings of field elements.

Products whose schoolbook cost exceeds ``MUL_THRESHOLD`` coefficient pairs go through numpy
integer convolution; extension-field coefficients are split into their F_p digits first and
recombined through the modulus.
"""
from __future__ import annotations

import hashlib
import itertools
import math
import os
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError
from .ffield import FieldElement, FieldSpec

__all__ = [
    "Poly",
    "Factorization",
    "poly_divmod",
    "poly_gcd",
    "is_irreducible",
    "factorize",
    "squarefree_decomposition",
    "enumerate_monic",
    "enumerate_monic_irreducible",
    "euler_phi",
    "monic_divisors",
    "canonical_key",
]

MUL_THRESHOLD = 1024
DIV_THRESHOLD = 2048
DIV_MIN_DIVISOR = 24


# ---------------------------------------------------------------------------------------
# raw coefficient-tuple kernels


def _trim(c) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _add(a, b, F: FieldSpec):
    if len(a) < len(b):
        a, b = b, a
    add = F.add_table
    out = list(a)
    for i, y in enumerate(b):
        if y:
            out[i] = add[out[i]][y]
    return _trim(out)


def _sub(a, b, F: FieldSpec):
    sub = F.sub_table
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, y in enumerate(b):
        if y:
            out[i] = sub[out[i]][y]
    return _trim(out)


def _scale(a, c: int, F: FieldSpec):
    if c == 0:
        return ()
    if c == 1:
        return tuple(a)
    row = F.mul_table[c]
    return tuple(row[x] for x in a)


def _mul_school(a, b, F: FieldSpec):
    if F.s == 1:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    mul, add = F.mul_table, F.add_table
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    k = i + j
                    out[k] = add[out[k]][row[y]]
    return _trim(out)


def _mul_numpy(a, b, F: FieldSpec):
    p, s = F.p, F.s
    A = np.asarray(a, dtype=np.int64)
    B = np.asarray(b, dtype=np.int64)
    if s == 1:
        return _trim((np.convolve(A, B) % p).tolist())
    w = F.np_digit_weights
    Ad = (A[None, :] // w[:, None]) % p
    Bd = (B[None, :] // w[:, None]) % p
    n = len(a) + len(b) - 1
    prods = np.zeros((2 * s - 1, n), dtype=np.int64)
    for i in range(s):
        for j in range(s):
            prods[i + j] += np.convolve(Ad[i], Bd[j])
    digits = (F.reduction_matrix.T @ (prods % p)) % p  # (s, n)
    return _trim((w @ digits).tolist())


def _mul(a, b, F: FieldSpec):
    if not a or not b:
        return ()
    if len(a) * len(b) <= MUL_THRESHOLD:
        return _mul_school(a, b, F)
    return _mul_numpy(a, b, F)


def _divmod_school(a, b, F: FieldSpec):
    nb = len(b)
    r = list(a)
    mul, sub = F.mul_table, F.sub_table
    inv = F.inv_table[b[-1]]
    q = [0] * (len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        c = r[i + nb - 1]
        if c:
            c = mul[c][inv]
            q[i] = c
            row = mul[c]
            for j in range(nb):
                if b[j]:
                    r[i + j] = sub[r[i + j]][row[b[j]]]
    return _trim(q), _trim(r[: nb - 1])


def _divmod_numpy(a, b, F: FieldSpec):
    nb = len(b)
    r = np.asarray(a, dtype=np.int64).copy()
    B = np.asarray(b, dtype=np.int64)
    inv = F.inv_table[b[-1]]
    q = np.zeros(len(a) - nb + 1, dtype=np.int64)
    if F.s == 1:
        p = F.p
        B = B * inv % p  # monic divisor
        for i in range(len(a) - nb, -1, -1):
            c = int(r[i + nb - 1])
            if c:
                q[i] = c
                r[i:i + nb] = (r[i:i + nb] - c * B) % p
        q = q * inv % p
    else:
        mul, sub = F.np_mul, F.np_sub
        B = mul[inv][B]
        for i in range(len(a) - nb, -1, -1):
            c = int(r[i + nb - 1])
            if c:
                q[i] = c
                r[i:i + nb] = sub[r[i:i + nb], mul[c][B]]
        q = mul[inv][q]
    return _trim(q.tolist()), _trim(r[: nb - 1].tolist())


def _divmod(a, b, F: FieldSpec):
    if not b:
        raise DomainError("polynomial division by zero")
    if len(a) < len(b):
        return (), tuple(a)
    # the numpy loop pays per quotient term, so it only wins once the divisor is long
    if len(b) < DIV_MIN_DIVISOR or (len(a) - len(b) + 1) * len(b) <= DIV_THRESHOLD:
        return _divmod_school(a, b, F)
    return _divmod_numpy(a, b, F)


def _frobenius(a, q: int):
    """a(T)^q = a(T^q), because c^q = c for c in F_q."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * q + 1)
    out[::q] = a
    return tuple(out)


# ---------------------------------------------------------------------------------------


class Poly:
    """Element of F_q[T]."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FieldSpec, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        c = []
        for x in coeffs:
            if isinstance(x, FieldElement):
                x = x.value
            if not 0 <= x < field.q:
                raise DomainError(f"coefficient {x} is not an element of F_{field.q}")
            c.append(x)
        self.field = field
        self.coeffs = _trim(c)
        self._hash = None

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs: tuple[int, ...]) -> Poly:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field: FieldSpec, c) -> Poly:
        return cls(field, (c,))

    @classmethod
    def T(cls, field: FieldSpec) -> Poly:
        return cls._raw(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c=1) -> Poly:
        return cls(field, (0,) * k + (c,))

    # -- basic properties ---------------------------------------------------------------

    @property
    def deg(self):
        """Degree, with deg(0) = -inf."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return Poly._raw(self.field, _scale(self.coeffs, self.field.inv_table[self.coeffs[-1]], self.field))

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    # -- arithmetic ---------------------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field is not self.field and other.field != self.field:
                raise DomainError("polynomials over different fields")
            return other
        if isinstance(other, FieldElement):
            return Poly(self.field, (other.value,))
        if isinstance(other, int):
            if self.field.s == 1:
                return Poly(self.field, (other % self.field.p,))
            if other in (0, 1):
                return Poly(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, _add(self.coeffs, other.coeffs, self.field))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, _sub(self.coeffs, other.coeffs, self.field))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        neg = self.field.neg_table
        return Poly._raw(self.field, tuple(neg[x] for x in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.coeffs) == 1:
            return Poly._raw(self.field, _scale(self.coeffs, other.coeffs[0], self.field))
        return Poly._raw(self.field, _mul(self.coeffs, other.coeffs, self.field))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q, r = _divmod(self.coeffs, other.coeffs, self.field)
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.coeffs) < len(other.coeffs):
            return self
        return Poly._raw(self.field, _divmod(self.coeffs, other.coeffs, self.field)[1])

    def __pow__(self, e: int, modulus: Poly | None = None):
        if e < 0:
            raise DomainError("negative exponent")
        result = Poly.one(self.field)
        base = self if modulus is None else self % modulus
        while e:
            if e & 1:
                result = result * base
                if modulus is not None:
                    result = result % modulus
            e >>= 1
            if e:
                base = base * base
                if modulus is not None:
                    base = base % modulus
        return result

    def exact_div(self, other: Poly) -> Poly:
        """Quotient of an exact division; raises if the remainder is nonzero."""
        q, r = divmod(self, other)
        if r.coeffs:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def frobenius(self) -> Poly:
        """The q-th power, computed as T -> T^q on the exponents."""
        return Poly._raw(self.field, _frobenius(self.coeffs, self.field.q))

    def shift(self, k: int) -> Poly:
        """Multiply by T^k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def derivative(self) -> Poly:
        mul = self.field.mul_table
        p = self.field.p
        return Poly._raw(self.field, _trim([mul[c][i % p] for i, c in enumerate(self.coeffs) if i]))

    def evaluate(self, x: int) -> int:
        mul, add = self.field.mul_table, self.field.add_table
        acc = 0
        for c in reversed(self.coeffs):
            acc = add[mul[acc][x]][c]
        return acc

    # -- comparisons & hashing ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (self.field is other.field or self.field == other.field)
        if isinstance(other, int) and not isinstance(other, bool):
            c = self._coerce(other)
            return c is not NotImplemented and self.coeffs == c.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.q, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __lt__(self, other: Poly):
        return canonical_key(self) < canonical_key(other)

    def __str__(self):
        from .textio import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"

    def __reduce__(self):
        return (Poly, (self.field, self.coeffs))


def canonical_key(f: Poly):
    """Canonical ordering: degree, then coefficient vector compared from the constant term."""
    return (len(f.coeffs), f.coeffs)


# ---------------------------------------------------------------------------------------
# operations


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DomainError("polynomial division by zero")
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd."""
    if not a and not b:
        raise DomainError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def _prime_factors_int(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_mod(h: Poly, f: Poly) -> Poly:
    return h.frobenius() % f


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: f | T^(q^n) - T and gcd(T^(q^(n/l)) - T, f) = 1 for primes l | n."""
    if f.deg < 1:
        raise DomainError("irreducibility is only defined for positive degree")
    n = f.deg
    if n == 1:
        return True
    f = f.monic()
    T = Poly.T(f.field)
    if f.coeffs[0] == 0:
        return False
    checkpoints = {n // ell for ell in _prime_factors_int(n)}
    h = T
    for k in range(1, n + 1):
        h = _frobenius_mod(h, f)
        if k in checkpoints and not poly_gcd(h - T, f).is_one():
            return False
    return (h - T) % f == Poly.zero(f.field)


@dataclass(frozen=True)
class Factorization:
    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        F = self.unit.spec
        out = Poly.constant(F, self.unit.value)
        for prime, e in self.factors:
            out = out * prime ** e
        return out

    @property
    def primes(self) -> list[Poly]:
        return [p for p, _ in self.factors]

    def exponent(self, prime: Poly) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def __str__(self):
        parts = []
        if self.unit.value != 1 or not self.factors:
            parts.append(str(self.unit))
        for p, e in self.factors:
            s = f"({p})" if len([c for c in p.coeffs if c]) > 1 else str(p)
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts)


def _pth_root(f: Poly) -> Poly:
    """The g with g^p = f, for f' = 0 (only exponents divisible by p occur)."""
    F = f.field
    p = F.p
    # c^(1/p) = c^(q/p) in F_q
    e = F.q // p
    return Poly._raw(F, tuple(F.pow(c, e) for c in f.coeffs[::p]))


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree, pairwise coprime g_i with monic(f) = prod g_i^(m_i), sorted by m_i."""
    f = f.monic()
    found: dict[int, Poly] = {}

    def record(g: Poly, mult: int):
        if g.deg >= 1:
            found[mult] = found[mult] * g if mult in found else g

    def from_pth_root(c: Poly, scale: int):
        for g, m in squarefree_decomposition(_pth_root(c)):
            record(g, m * c.field.p * scale)

    if f.deg < 1:
        return []
    fp = f.derivative()
    if not fp:
        from_pth_root(f, 1)
    else:
        c = poly_gcd(f, fp)
        w = f.exact_div(c)
        i = 1
        while not w.is_one():
            y = poly_gcd(w, c)
            record(w.exact_div(y), i)
            i += 1
            w = y
            c = c.exact_div(y)
        if not c.is_one():
            from_pth_root(c, 1)
    return [(found[m], m) for m in sorted(found)]


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """f monic squarefree -> [(product of all degree-d prime factors, d)]."""
    out = []
    T = Poly.T(f.field)
    h = T
    d = 0
    while f.deg >= 2 * (d + 1):
        d += 1
        h = _frobenius_mod(h, f)
        g = poly_gcd(h - T, f)
        if not g.is_one():
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    if f.deg >= 1:
        out.append((f, f.deg))
    return out


def _random_poly(F: FieldSpec, below: int, rng: random.Random) -> Poly:
    return Poly._raw(F, _trim([rng.randrange(F.q) for _ in range(below)]))


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split monic squarefree f whose prime factors all have degree d (Cantor-Zassenhaus)."""
    if f.deg == d:
        return [f]
    F = f.field
    n = f.deg
    while True:
        a = _random_poly(F, n, rng)
        if a.deg < 1:
            continue
        if F.p == 2:
            # absolute trace F_{q^d} -> F_2: a + a^2 + a^4 + ... + a^(2^(s d - 1))
            b, t = a, a
            for _ in range(F.s * d - 1):
                t = (t * t) % f
                b = b + t
        else:
            b = pow(a, (F.q ** d - 1) // 2, f) - Poly.one(F)
        g = poly_gcd(b, f)
        if 0 < g.deg < n:
            return _equal_degree(g, d, rng) + _equal_degree(f.exact_div(g), d, rng)


def _seed_for(f: Poly) -> int:
    env = os.environ.get("CARLITZ_SEED")
    if env is not None:
        return int(env)
    blob = f"{f.field.p},{f.field.s}:".encode() + bytes(
        b for c in f.coeffs for b in c.to_bytes(2, "little"))
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "little")


def factorize(f: Poly) -> Factorization:
    """Prime factorization: squarefree split, distinct-degree split, equal-degree split."""
    if not f:
        raise DomainError("cannot factor the zero polynomial")
    F = f.field
    unit = FieldElement(F, f.lc)
    rng = random.Random(_seed_for(f))
    exps: dict[Poly, int] = {}
    for g, mult in squarefree_decomposition(f):
        for block, d in _distinct_degree(g):
            for prime in _equal_degree(block, d, rng):
                exps[prime] = exps.get(prime, 0) + mult
    factors = tuple(sorted(exps.items(), key=lambda t: canonical_key(t[0])))
    return Factorization(unit, factors)


def valuation(f: Poly, prime: Poly) -> int:
    """Largest e with prime^e | f (f nonzero, prime of positive degree)."""
    if not f:
        raise DomainError("valuation of zero")
    e = 0
    while True:
        qt, r = divmod(f, prime)
        if r:
            return e
        f = qt
        e += 1


def enumerate_monic(d: int, field: FieldSpec) -> Iterator[Poly]:
    """All q^d monic polynomials of degree d; the constant term varies fastest."""
    for high_first in itertools.product(range(field.q), repeat=d):
        yield Poly._raw(field, tuple(reversed(high_first)) + (1,))


def enumerate_monic_upto(d: int, field: FieldSpec) -> Iterator[Poly]:
    for k in range(d + 1):
        yield from enumerate_monic(k, field)


def enumerate_monic_irreducible(d: int, field: FieldSpec) -> Iterator[Poly]:
    if d < 1:
        raise DomainError("primes have positive degree")
    for f in enumerate_monic(d, field):
        if is_irreducible(f):
            yield f


def euler_phi(m: Poly) -> int:
    """Number of nonzero polynomials of degree < deg m coprime to m (1 for a unit)."""
    if not m:
        raise DomainError("Phi(0) is undefined")
    q = m.field.q
    out = 1
    for prime, e in factorize(m).factors:
        d = prime.deg
        out *= q ** (d * e) - q ** (d * (e - 1))
    return out


def monic_divisors(m: Poly) -> list[Poly]:
    if not m:
        raise DomainError("zero has infinitely many divisors")
    divs = [Poly.one(m.field)]
    for prime, e in factorize(m).factors:
        powers = [prime ** k for k in range(e + 1)]
        divs = [d * pk for d in divs for pk in powers]
    return sorted(divs, key=canonical_key)
