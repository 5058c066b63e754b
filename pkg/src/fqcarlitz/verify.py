"""Bounded brute-force checks of the Bang-Zsigmondy and Feit analogues.

Every monic pair (u, m) inside a :class:`SearchBounds` box is classified; pairs without a
(large) Zsigmondy prime are collected and compared with the exceptional families the theorems
list.  A ``match`` is therefore a claim about the box only.

Work is cut into blocks keyed by (deg u, deg m, slice of the m-enumeration) so that the
result does not depend on how many worker processes run it.
"""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .carlitz import carlitz_eval
from .errors import DomainError
from .ffield import FieldSpec, field_from_q, field_make
from .polyring import (
    Poly,
    canonical_key,
    enumerate_monic,
    factorize,
    is_irreducible,
    poly_gcd,
)
from .textio import parse_poly
from .zsigmondy import (
    ZsigmondyReport,
    _largeness,
    carlitz_annihilator,
    classify,
    is_zsigmondy,
    large_zsigmondy_primes,
    zsigmondy_cofactor,
    zsigmondy_primes,
)

__all__ = [
    "SearchBounds",
    "ExceptionReport",
    "verify_bang_zsigmondy",
    "verify_feit",
    "exceptional_set",
    "reproduce_table",
    "expected_exceptions",
    "LISTED_SETS",
]

BLOCK = 64

# Exceptional sets exactly as listed in the theorems; each entry is (q, u, [m, ...]).
LISTED_SETS = {
    "X3": (3, "1", ["(T-1)*T^2", "T*(T+1)^2", "(T+1)*(T+2)^2"]),
    "X4": (3, "m", ["T", "T+1", "T+2"]),
    "X5": (3, "1", []),
    "X6": (5, "1", ["T*(T+1)", "(T+1)*(T+2)", "(T+2)*(T+3)", "(T+3)*(T+4)", "(T+4)*T"]),
    "X8": (3, "1", ["T^2", "(T+1)^2", "(T+2)^2"]),
    "X9": (4, "1", ["T*(T+w)", "T*(T+w^2)", "(T+1)*(T+w)", "(T+1)*(T+w^2)"]),
    "X10": (3, "1", ["T^3+2*T"]),
}
X_SET_Q = {"X3": 3, "X4": 3, "X5": 3, "X6": 5, "X8": 3, "X9": 4, "X10": 3}


@dataclass(frozen=True)
class SearchBounds:
    q: int
    max_deg_m: int
    max_deg_u: int

    def __post_init__(self):
        if self.q <= 2:
            raise DomainError("the theorems assume q > 2")
        if self.max_deg_m < 0 or self.max_deg_u < 0:
            raise DomainError("degree bounds must be nonnegative")
        if max(self.max_deg_m, self.max_deg_u) < 1:
            raise DomainError("at least one degree bound must be positive")

    def contains(self, u: Poly, m: Poly) -> bool:
        return u.deg <= self.max_deg_u and m.deg <= self.max_deg_m

    def to_dict(self) -> dict:
        return {"max_deg_m": self.max_deg_m, "max_deg_u": self.max_deg_u}


def _pair_key(pair):
    u, m = pair
    return canonical_key(m), canonical_key(u)


@dataclass
class ExceptionReport:
    theorem: str
    bounds: SearchBounds
    exceptions: list[ZsigmondyReport]
    expected: list[tuple[Poly, Poly]]
    pairs_checked: int = 0
    match: bool = field(init=False)

    def __post_init__(self):
        found = {(r.u, r.m) for r in self.exceptions}
        self.match = found == set(self.expected)

    def exception_pairs(self) -> list[tuple[Poly, Poly]]:
        return [(r.u, r.m) for r in self.exceptions]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "q": self.bounds.q,
            "bounds": self.bounds.to_dict(),
            "exceptions": [
                {
                    "u": str(r.u),
                    "m": str(r.m),
                    "zsigmondy": [str(p) for p in r.zsigmondy_primes],
                    "large": [{"prime": str(p), "reason": why} for p, why in r.large],
                }
                for r in self.exceptions
            ],
            "expected": [{"u": str(u), "m": str(m)} for u, m in self.expected],
            "match": self.match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------------------
# the theorems' exceptional families


def _degree_one_primes(F: FieldSpec) -> list[Poly]:
    return list(enumerate_monic(1, F))


def _p_minus_one_times_p(F: FieldSpec) -> list[Poly]:
    return [(p - 1) * p for p in _degree_one_primes(F)]


def _listed_members(name: str, F: FieldSpec) -> list[tuple[Poly, Poly]]:
    q, u_rule, ms = LISTED_SETS[name]
    if F.q != q:
        return []
    one = Poly.one(F)
    out = []
    for text in ms:
        m = parse_poly(text, F)
        out.append((m if u_rule == "m" else one, m))
    return out


def expected_exceptions(theorem: str, bounds: SearchBounds) -> list[tuple[Poly, Poly]]:
    """The theorem's exceptional pairs for this q, cut down to the bounds."""
    F = field_from_q(bounds.q)
    one = Poly.one(F)
    pairs: set[tuple[Poly, Poly]] = set()
    if theorem in ("bang-zsigmondy", "feit") and F.q in (3, 4):
        # q in {3, 4}: u = 1, m = (p - 1) p for a degree-one prime p
        pairs.update((one, m) for m in _p_minus_one_times_p(F))
    if theorem == "feit":
        for name in ("X3", "X4", "X6", "X8", "X9", "X10"):
            pairs.update(_listed_members(name, F))
        # u = 1 and m any degree-one prime, for every q
        pairs.update((one, m) for m in _degree_one_primes(F))
    elif theorem != "bang-zsigmondy":
        raise ValueError(f"unknown theorem {theorem!r}")
    return sorted((pr for pr in pairs if bounds.contains(*pr)), key=_pair_key)


# ---------------------------------------------------------------------------------------
# search


def _work_units(bounds: SearchBounds, block: int = BLOCK):
    q = bounds.q
    for du in range(bounds.max_deg_u + 1):
        for dm in range(bounds.max_deg_m + 1):
            if du == 0 and dm == 0:
                continue
            total = q ** dm
            for start in range(0, total, block):
                yield du, dm, start, min(start + block, total)


def _run_unit(args):
    theorem, p, s, du, dm, start, stop = args
    F = field_make(p, s)
    found = []
    checked = 0
    ms = list(itertools.islice(enumerate_monic(dm, F), start, stop))
    for u in enumerate_monic(du, F):
        for m in ms:
            checked += 1
            rep = classify(u, m)
            if theorem == "bang-zsigmondy" and not rep.has_zsigmondy:
                found.append(rep)
            elif theorem == "feit" and not rep.has_large:
                found.append(rep)
    return checked, found


def _search(theorem: str, bounds: SearchBounds, workers: int = 1) -> ExceptionReport:
    F = field_from_q(bounds.q)
    units = [(theorem, F.p, F.s, *u) for u in _work_units(bounds)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_unit, units))
    else:
        results = [_run_unit(u) for u in units]
    checked = sum(c for c, _ in results)
    found = sorted((r for _, rs in results for r in rs), key=lambda r: _pair_key((r.u, r.m)))
    return ExceptionReport(theorem, bounds, found, expected_exceptions(theorem, bounds), checked)


def verify_bang_zsigmondy(bounds: SearchBounds, workers: int = 1) -> ExceptionReport:
    """All bounded pairs without a Zsigmondy prime, against the (1, (p - 1) p) family."""
    return _search("bang-zsigmondy", bounds, workers)


def verify_feit(bounds: SearchBounds, workers: int = 1) -> ExceptionReport:
    """All bounded pairs without a large Zsigmondy prime, against the listed exceptional families."""
    return _search("feit", bounds, workers)


# ---------------------------------------------------------------------------------------
# exceptional sets recomputed from their defining conditions


def _m_plus_one_sole_zsigmondy(u: Poly, m: Poly) -> bool:
    """m + 1 is the only Zsigmondy prime for (u, m)."""
    target = m + 1
    if not is_irreducible(target):
        return False
    _, rest = zsigmondy_cofactor(u, m)
    if rest.is_one():
        return False
    while True:
        qt, r = divmod(rest, target)
        if r:
            return False
        rest = qt
        if rest.is_one():
            break
    return is_zsigmondy(target, u, m)


def _no_large_given_sole(u: Poly, m: Poly) -> bool:
    # with m + 1 the only Zsigmondy prime, it is the only candidate for being large
    return _largeness(m + 1, u, m) is None


def _defining_filter(pairs, F: FieldSpec):
    out = []
    for u, m in pairs:
        if _m_plus_one_sole_zsigmondy(u, m) and _no_large_given_sole(u, m):
            out.append((u, m))
    return out


def _candidates_x3(F, max_s):
    one = Poly.one(F)
    for p in _degree_one_primes(F):
        for s in range(2, max_s + 1):
            yield one, (p - 1) * p ** s


def _candidates_x9(F):
    one = Poly.one(F)
    lin = _degree_one_primes(F)
    for a, b in itertools.combinations(lin, 2):
        yield one, a * b


def _candidates_x10(F):
    one = Poly.one(F)
    seen = set()
    for d1 in (1, 2):
        for m1 in enumerate_monic(d1, F):
            for m2 in enumerate_monic(1, F):
                if not poly_gcd(m1, m2).is_one():
                    continue
                m = m1 * m2
                if m in seen:
                    continue
                seen.add(m)
                if all(e == 1 for _, e in factorize(m).factors):
                    yield one, m


def _x5(F):
    out = []
    for d in (2, 3):
        for qp in enumerate_monic(d, F):
            if not is_irreducible(qp):
                continue
            ann = carlitz_annihilator(Poly.one(F), qp)
            if ann.deg != 2:
                continue
            m = ann * qp
            if is_irreducible(m + 1):
                out.append((Poly.one(F), m))
    return out


def _x7(F):
    one = Poly.one(F)
    return [(one, m) for m in _degree_one_primes(F) if not large_zsigmondy_primes(one, m)]


def exceptional_set(name: str, q: int, max_s: int = 7) -> list[tuple[Poly, Poly]]:
    """Recompute X3 ... X10 for field size q; returns canonically sorted (u, m) pairs.

    ``max_s`` widens the exponent range scanned for X3 beyond the default 2 <= s <= 7.
    """
    name = name.upper()
    if name == "X7":
        if q <= 2:
            raise DomainError("X7 needs q > 2")
    elif name not in X_SET_Q:
        raise DomainError(f"unknown exceptional set {name!r}")
    elif X_SET_Q[name] != q:
        raise DomainError(f"{name} is defined for q = {X_SET_Q[name]}, not q = {q}")
    F = field_from_q(q)
    one = Poly.one(F)
    if name == "X3":
        found = _defining_filter(_candidates_x3(F, max_s), F)
    elif name == "X4":
        found = _defining_filter(((m, m) for m in _degree_one_primes(F)), F)
    elif name == "X5":
        found = _x5(F)
    elif name == "X6":
        found = _defining_filter(((one, m) for m in _p_minus_one_times_p(F)), F)
    elif name == "X7":
        found = _x7(F)
    elif name == "X8":
        found = _defining_filter(((one, p * p) for p in _degree_one_primes(F)), F)
    elif name == "X9":
        found = _defining_filter(_candidates_x9(F), F)
    else:
        found = _defining_filter(_candidates_x10(F), F)
    return sorted(set(found), key=_pair_key)


def listed_exceptional_set(name: str) -> list[tuple[Poly, Poly]]:
    """The set as listed in the literature, parsed from LISTED_SETS."""
    q = X_SET_Q[name.upper()]
    return sorted(_listed_members(name.upper(), field_from_q(q)), key=_pair_key)


# ---------------------------------------------------------------------------------------
# Tables 2 and 3


@dataclass
class TableRow:
    prime: Poly
    m: Poly
    value: Poly
    factorization: list[tuple[Poly, int]]
    witnesses: list[tuple[Poly, Poly]]
    annihilators: list[tuple[Poly, Poly]]
    zsigmondy: list[Poly]

    def to_dict(self) -> dict:
        return {
            "prime": str(self.prime),
            "m": str(self.m),
            "C_m(1)": str(self.value),
            "factorization": [[str(p), e] for p, e in self.factorization],
            "witnesses": [[str(n), str(v)] for n, v in self.witnesses],
            "annihilators": [[str(p), str(a)] for p, a in self.annihilators],
            "zsigmondy": [str(p) for p in self.zsigmondy],
        }


def reproduce_table(which: int) -> list[TableRow]:
    """Rows (p, m = (p - 1) p, factorization of C_m(1), witnesses) for every degree-one prime."""
    if which == 2:
        F = field_make(3)
    elif which == 3:
        F = field_make(2, 2)
    else:
        raise DomainError(f"there is no table {which}; choose 2 (q = 3) or 3 (q = 4)")
    one = Poly.one(F)
    rows = []
    for p in _degree_one_primes(F):
        m = (p - 1) * p
        value = carlitz_eval(m, one)
        fac = factorize(value)
        witnesses = [(n, carlitz_eval(n, one)) for n in (p - 1, p)]
        ann = [(pr, carlitz_annihilator(one, pr)) for pr in fac.primes]
        rows.append(TableRow(p, m, value, list(fac.factors), witnesses, ann, zsigmondy_primes(one, m)))
    return rows


def table_to_json(which: int, rows: list[TableRow]) -> str:
    q = 3 if which == 2 else 4
    return json.dumps({"table": which, "q": q, "rows": [r.to_dict() for r in rows]},
                      indent=2, sort_keys=True) + "\n"
