"""Carlitz module arithmetic over F_q[T] and Zsigmondy primes for the Carlitz module."""
from .carlitz import carlitz_coeffs, carlitz_eval, carlitz_eval_mod
from .cyclotomic import cyclotomic_eval, cyclotomic_poly
from .errors import DomainError, ParseError
from .ffield import FieldSpec, field_from_q, field_make
from .polyring import Poly, canonical_key, euler_phi, factorize, is_irreducible
from .textio import format_poly, parse_poly
from .verify import SearchBounds, exceptional_set, reproduce_table, verify_bang_zsigmondy, verify_feit
from .zsigmondy import (
    carlitz_annihilator,
    classify,
    large_zsigmondy_primes,
    zsigmondy_primes,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ParseError",
    "FieldSpec",
    "field_make",
    "field_from_q",
    "Poly",
    "canonical_key",
    "euler_phi",
    "factorize",
    "is_irreducible",
    "parse_poly",
    "format_poly",
    "carlitz_coeffs",
    "carlitz_eval",
    "carlitz_eval_mod",
    "cyclotomic_poly",
    "cyclotomic_eval",
    "carlitz_annihilator",
    "zsigmondy_primes",
    "large_zsigmondy_primes",
    "classify",
    "SearchBounds",
    "verify_bang_zsigmondy",
    "verify_feit",
    "exceptional_set",
    "reproduce_table",
]
