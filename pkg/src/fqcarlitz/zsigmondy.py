"""Carlitz annihilators and (large) Zsigmondy primes for pairs (u, m) in F_q[T].

The annihilator P_{u,p} plays the role of the multiplicative order of u modulo p: it is the
monic generator of {n : C_n(u) = 0 mod p}, and it divides p - 1.  A Zsigmondy prime for (u, m)
is a prime whose annihilator at u is exactly m.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .carlitz import carlitz_eval_mod
from .cyclotomic import cyclotomic_eval
from .errors import DomainError
from .polyring import Poly, canonical_key, factorize, is_irreducible, valuation

__all__ = [
    "ZsigmondyReport",
    "normalize_pair",
    "carlitz_annihilator",
    "is_zsigmondy",
    "zsigmondy_primes",
    "large_zsigmondy_primes",
    "zsigmondy_cofactor",
    "classify",
]


@functools.lru_cache(maxsize=65536)
def _is_prime(p: Poly) -> bool:
    return p.deg >= 1 and is_irreducible(p)


def _require_q(u: Poly):
    if u.field.q <= 2:
        raise DomainError("Zsigmondy primes are only classified for q > 2")


def _require_pair(u: Poly, m: Poly):
    _require_q(u)
    if not u.is_monic() or not m.is_monic():
        raise DomainError("u and m must be monic (normalize the pair first)")
    if u.deg < 1 and m.deg < 1:
        raise DomainError("u and m are both constants: there are no Zsigmondy primes")


def normalize_pair(u: Poly, m: Poly) -> tuple[Poly, Poly]:
    """Strip the leading units: (u, m) -> (u0, m0) with u = delta u0, m = eps m0."""
    if not u or not m:
        raise DomainError("u and m must be nonzero")
    return u.monic(), m.monic()


@functools.lru_cache(maxsize=65536)
def carlitz_annihilator(u: Poly, prime: Poly) -> Poly:
    """P_{u, prime}: 1 if prime | u, else the least-degree monic n with C_n(u) = 0 mod prime.

    Start from prime - 1, which always annihilates, and strip prime factors one copy at a
    time while the quotient still annihilates, as in a multiplicative-order computation.
    """
    if not u:
        raise DomainError("the annihilator of u = 0 is undefined")
    if not prime.is_monic() or not _is_prime(prime):
        raise DomainError(f"{prime} is not a monic prime")
    if prime.divides(u):
        return Poly.one(u.field)
    n = prime - 1
    for pi, e in factorize(n).factors:
        for _ in range(e):
            cand = n.exact_div(pi)
            if carlitz_eval_mod(cand, u, prime):
                break
            n = cand
    return n


def is_zsigmondy(prime: Poly, u: Poly, m: Poly) -> bool:
    _require_q(u)
    return carlitz_annihilator(u, prime) == m


def zsigmondy_cofactor(u: Poly, m: Poly) -> tuple[Poly, Poly]:
    """(Psi_m(u), R) where R is Psi_m(u) with every prime factor of m divided out, made monic.

    The prime factors of R are exactly the Zsigmondy primes for (u, m), without having to
    factor Psi_m(u) itself.  Requires deg m >= 1.
    """
    psi = cyclotomic_eval(m, u)
    rest = psi.monic()
    for prime, _ in factorize(m).factors:
        while True:
            qt, r = divmod(rest, prime)
            if r:
                break
            rest = qt
    return psi, rest


def zsigmondy_primes(u: Poly, m: Poly) -> list[Poly]:
    """All Zsigmondy primes for the monic pair (u, m), canonically sorted."""
    _require_pair(u, m)
    if m.deg < 1:
        found = factorize(u).primes
    else:
        psi = cyclotomic_eval(m, u)
        found = [p for p in factorize(psi).primes if not p.divides(m)]
    for p in found:
        if not is_zsigmondy(p, u, m):
            raise AssertionError(f"{p} divides Psi_m(u) but its annihilator is not {m}")
    return sorted(found, key=canonical_key)


def _largeness(prime: Poly, u: Poly, m: Poly) -> str | None:
    if prime.deg > m.deg:
        return "degree"
    if not carlitz_eval_mod(m, u, prime * prime):
        return "square"
    return None


def large_zsigmondy_primes(u: Poly, m: Poly) -> list[tuple[Poly, str]]:
    out = []
    for p in zsigmondy_primes(u, m):
        reason = _largeness(p, u, m)
        if reason is not None:
            out.append((p, reason))
    return out


@dataclass
class ZsigmondyReport:
    q: int
    u: Poly
    m: Poly
    psi_value: Poly | None
    zsigmondy_primes: list[Poly]
    large: list[tuple[Poly, str]]
    non_zsigmondy_factors: list[tuple[Poly, int]] = field(default_factory=list)
    m_plus_one_unique: bool = False

    @property
    def has_zsigmondy(self) -> bool:
        return bool(self.zsigmondy_primes)

    @property
    def has_large(self) -> bool:
        return bool(self.large)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "u": str(self.u),
            "m": str(self.m),
            "psi": None if self.psi_value is None else str(self.psi_value),
            "zsigmondy": [str(p) for p in self.zsigmondy_primes],
            "large": [{"prime": str(p), "reason": r} for p, r in self.large],
            "non_zsigmondy": [{"prime": str(p), "s": s} for p, s in self.non_zsigmondy_factors],
            "m_plus_one_unique": self.m_plus_one_unique,
        }


def classify(u: Poly, m: Poly) -> ZsigmondyReport:
    """Full Zsigmondy picture of (u, m) after unit normalization."""
    u, m = normalize_pair(u, m)
    _require_pair(u, m)
    q = u.field.q
    if m.deg < 1:
        primes = zsigmondy_primes(u, m)
        large = [(p, "degree") for p in primes]
        return ZsigmondyReport(q, u, m, None, primes, large)

    psi = cyclotomic_eval(m, u)
    fac = factorize(psi)
    zs, non = [], []
    for p, e in fac.factors:
        if p.divides(m):
            # non-Zsigmondy: m = P_{u,p} p^s and p appears once in Psi_m(u)
            s = valuation(m, p)
            if carlitz_annihilator(u, p) * p ** s != m:
                raise AssertionError(f"{m} != P_(u,{p}) * {p}^{s}")
            if e != 1:
                raise AssertionError(f"{p}^2 divides Psi_m(u) for a non-Zsigmondy prime")
            non.append((p, s))
        else:
            if not is_zsigmondy(p, u, m):
                raise AssertionError(f"{p} divides Psi_m(u) but its annihilator is not {m}")
            zs.append(p)
    large = []
    for p in zs:
        reason = _largeness(p, u, m)
        if reason is not None:
            large.append((p, reason))
    unique = len(zs) == 1 and zs[0] == m + 1
    return ZsigmondyReport(q, u, m, psi, zs, large, non, unique)
