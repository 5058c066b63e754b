"""Finite fields F_q, q = p^s, presented as F_p[w]/(modulus).

Elements are stored as plain ints in ``range(q)``: the int ``c_0 + c_1 p + ... + c_{s-1} p^{s-1}``
stands for ``c_0 + c_1 w + ... + c_{s-1} w^{s-1}``.  All arithmetic goes through tables that
are built once per field, so ``q`` is expected to be small (nothing here goes past 25).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_make",
    "field_from_q",
    "ff_add",
    "ff_sub",
    "ff_mul",
    "ff_inv",
    "ff_pow",
    "format_element",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- dense F_p polynomials as lists, low degree first; only used to build tables ----------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _fp_trim(a)
    return a


def _fp_is_irreducible(f, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _fp_mod(f, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    # product() varies the last slot fastest, so tuples come out ordered
    # by the constant term first, then the linear term, ...
    for low in itertools.product(range(p), repeat=s):
        f = list(low) + [1]
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    s: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"characteristic {self.p} is not prime")
        if self.s < 1:
            raise DomainError(f"extension degree must be >= 1, got {self.s}")
        if len(self.modulus) != self.s + 1 or self.modulus[-1] != 1:
            raise DomainError("modulus must be monic of degree s")
        if self.s > 1 and not _fp_is_irreducible(list(self.modulus), self.p):
            raise DomainError("modulus is reducible over F_p")

    @property
    def q(self) -> int:
        return self.p ** self.s

    @property
    def is_prime_field(self) -> bool:
        return self.s == 1

    def __repr__(self) -> str:
        if self.s == 1:
            return f"FieldSpec(F_{self.p})"
        mod = format_wpoly(self.modulus, self.p)
        return f"FieldSpec(F_{self.q} = F_{self.p}[w]/({mod}))"

    # -- element <-> digit vectors -----------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d
        return v

    # -- tables ------------------------------------------------------------------------

    @cached_property
    def _w_powers(self) -> list[tuple[int, ...]]:
        """Digit vectors of w^k for 0 <= k <= 2s - 2, reduced by the modulus."""
        p, s = self.p, self.s
        out = []
        cur = [1] + [0] * (s - 1)
        for _ in range(2 * s - 1):
            out.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % p for c, m in zip(cur, self.modulus)]
        return out

    @cached_property
    def reduction_matrix(self) -> np.ndarray:
        """(2s - 1, s) int64 matrix mapping a w-power to its reduced digit vector."""
        return np.array(self._w_powers, dtype=np.int64)

    def _mul_raw(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        out = [0] * s
        for k, c in enumerate(prod):
            if c:
                for r, wr in enumerate(self._w_powers[k]):
                    out[r] += c * wr
        return self.from_digits(x % p for x in out)

    @cached_property
    def add_table(self) -> list[list[int]]:
        q = self.q
        return [[self.from_digits((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b)))
                 for b in range(q)] for a in range(q)]

    @cached_property
    def sub_table(self) -> list[list[int]]:
        q = self.q
        return [[self.from_digits((x - y) % self.p for x, y in zip(self.digits(a), self.digits(b)))
                 for b in range(q)] for a in range(q)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        q = self.q
        return [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self.sub_table[0][a] for a in range(self.q)]

    @cached_property
    def inv_table(self) -> list[int]:
        inv = [0] * self.q
        for a in range(1, self.q):
            inv[a] = self.pow(a, self.q - 2)
        return inv

    @cached_property
    def np_add(self) -> np.ndarray:
        return np.array(self.add_table, dtype=np.int64)

    @cached_property
    def np_sub(self) -> np.ndarray:
        return np.array(self.sub_table, dtype=np.int64)

    @cached_property
    def np_mul(self) -> np.ndarray:
        return np.array(self.mul_table, dtype=np.int64)

    @cached_property
    def np_digit_weights(self) -> np.ndarray:
        return self.p ** np.arange(self.s, dtype=np.int64)

    # -- scalar helpers on the int encoding ----------------------------------------------

    def pow(self, a: int, e: int) -> int:
        mul = self.mul_table
        result, base = 1, a
        while e:
            if e & 1:
                result = mul[result][base]
            base = mul[base][base]
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise DomainError("element belongs to a different field")
            return value
        if isinstance(value, str):
            from .textio import parse_element
            return parse_element(value, self)
        if not 0 <= value < self.q:
            raise DomainError(f"{value} does not encode an element of F_{self.q}")
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        """The class of w (equal to 0 in a prime field, where w is meaningless)."""
        return FieldElement(self, self.p if self.s > 1 else 0)


@functools.cache
def field_make(p: int, s: int = 1) -> FieldSpec:
    """Build F_{p^s}, presented with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if s < 1:
        raise DomainError(f"extension degree must be >= 1, got {s}")
    modulus = (0, 1) if s == 1 else _smallest_irreducible(p, s)
    return FieldSpec(p, s, modulus)


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p^s, or raise DomainError if q is not a prime power."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, s


def field_from_q(q: int) -> FieldSpec:
    return field_make(*prime_power_decomposition(q))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients in the generator w, lowest power first."""
        return self.spec.digits(self.value)

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.spec.element(other % self.spec.p if self.spec.s == 1 else other)
        if other.spec != self.spec:
            raise DomainError("mismatched fields")
        return other

    def __add__(self, other):
        return ff_add(self, self._check(other))

    def __sub__(self, other):
        return ff_sub(self, self._check(other))

    def __mul__(self, other):
        return ff_mul(self, self._check(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_table[self.value])

    def __pow__(self, e: int):
        return ff_pow(self, e)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_element(self.value, self.spec)

    def __repr__(self):
        return f"FieldElement({self})"


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise DomainError("mismatched fields")
    return a.spec


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec, spec.add_table[a.value][b.value])


def ff_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec, spec.sub_table[a.value][b.value])


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same(a, b)
    return FieldElement(spec, spec.mul_table[a.value][b.value])


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        return ff_pow(ff_inv(a), -e)
    return FieldElement(a.spec, a.spec.pow(a.value, e))


def ff_inv(a: FieldElement) -> FieldElement:
    """Inverse as a^(q-2)."""
    if a.value == 0:
        raise DomainError("zero has no inverse")
    return FieldElement(a.spec, a.spec.pow(a.value, a.spec.q - 2))


def format_wpoly(digits, p: int) -> str:
    terms = []
    for k in range(len(digits) - 1, -1, -1):
        c = digits[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "w" if k == 1 else f"w^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def format_element(a: int, spec: FieldSpec) -> str:
    if spec.s == 1:
        return str(a)
    return format_wpoly(spec.digits(a), spec.p)
