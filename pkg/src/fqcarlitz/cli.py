"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 parse/usage error, 3 ``verify`` found a mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from .carlitz import carlitz_eval, carlitz_eval_mod
from .cyclotomic import cyclotomic_eval, cyclotomic_poly
from .errors import DomainError, ParseError
from .ffield import FieldSpec, field_from_q, field_make
from .polyring import euler_phi, is_irreducible
from .textio import parse_poly
from .verify import (
    SearchBounds,
    exceptional_set,
    reproduce_table,
    table_to_json,
    verify_bang_zsigmondy,
    verify_feit,
)
from .zsigmondy import (
    carlitz_annihilator,
    classify,
    large_zsigmondy_primes,
    normalize_pair,
    zsigmondy_primes,
)

__all__ = ["run", "main", "parse_poly"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fqcarlitz", description="Carlitz module and Zsigmondy primes over F_q[T]")
    ap.add_argument("--q", type=int, help="field size (a prime power)")
    ap.add_argument("--p", type=int, help="characteristic")
    ap.add_argument("--s", type=int, default=1, help="extension degree (with --p)")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write output here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("carlitz", help="C_m(u)")
    c.add_argument("m")
    c.add_argument("u")
    c = sub.add_parser("carlitz-mod", help="C_m(u) mod a modulus")
    c.add_argument("m")
    c.add_argument("u")
    c.add_argument("mod")
    c = sub.add_parser("cyclotomic", help="Psi_m(x), or Psi_m(u) when u is given")
    c.add_argument("m")
    c.add_argument("u", nargs="?")
    c = sub.add_parser("phi", help="Euler function Phi(m)")
    c.add_argument("m")
    c = sub.add_parser("annihilator", help="Carlitz annihilator P_{u,p}")
    c.add_argument("u")
    c.add_argument("p")
    for name in ("zsigmondy", "large", "classify"):
        c = sub.add_parser(name)
        c.add_argument("u")
        c.add_argument("m")
    c = sub.add_parser("verify", help="bounded check of a theorem")
    c.add_argument("theorem", choices=("bang", "feit"))
    c.add_argument("--max-deg-m", type=int, required=True)
    c.add_argument("--max-deg-u", type=int, required=True)
    c = sub.add_parser("table", help="reproduce Table 2 (q = 3) or Table 3 (q = 4)")
    c.add_argument("which", type=int, choices=(2, 3))
    c = sub.add_parser("xset", help="recompute an exceptional set X3 ... X10")
    c.add_argument("name")
    c.add_argument("--max-s", type=int, default=7, help="exponent bound for X3")
    return ap


def _field(args, required: bool = True) -> FieldSpec | None:
    # a bad field is a usage problem, not a domain one
    try:
        if args.q is not None:
            return field_from_q(args.q)
        if args.p is not None:
            return field_make(args.p, args.s)
    except DomainError as exc:
        raise _UsageError(str(exc)) from None
    if required:
        raise _UsageError("a field is required: pass --q N or --p P [--s S]")
    return None


def _pair_dict(u, m):
    return {"u": str(u), "m": str(m)}


def _dispatch(args) -> tuple[str, int]:
    cmd = args.command
    as_json = args.format == "json"

    if cmd == "table":
        forced = 3 if args.which == 2 else 4
        F = _field(args, required=False)
        if F is not None and F.q != forced:
            raise DomainError(f"table {args.which} lives over q = {forced}, not q = {F.q}")
        rows = reproduce_table(args.which)
        if as_json:
            return table_to_json(args.which, rows), 0
        lines = []
        for r in rows:
            fac = " * ".join(f"({p})^{e}" if e > 1 else f"({p})" for p, e in r.factorization)
            wit = ", ".join(f"C_{{{n}}}(1) = {v}" for n, v in r.witnesses)
            lines.append(f"p = {r.prime} | m = {r.m} | C_m(1) = {fac} | {wit}")
        return "\n".join(lines) + "\n", 0

    F = _field(args)
    P = lambda text: parse_poly(text, F)  # noqa: E731

    if cmd == "carlitz":
        out = carlitz_eval(P(args.m), P(args.u))
        return (json.dumps({"value": str(out)}) if as_json else str(out)) + "\n", 0
    if cmd == "carlitz-mod":
        out = carlitz_eval_mod(P(args.m), P(args.u), P(args.mod))
        return (json.dumps({"value": str(out)}) if as_json else str(out)) + "\n", 0
    if cmd == "cyclotomic":
        m = P(args.m)
        out = cyclotomic_poly(m) if args.u is None else cyclotomic_eval(m, P(args.u))
        return (json.dumps({"value": str(out)}) if as_json else str(out)) + "\n", 0
    if cmd == "phi":
        out = euler_phi(P(args.m))
        return (json.dumps({"phi": out}) if as_json else str(out)) + "\n", 0
    if cmd == "annihilator":
        prime = P(args.p)
        if prime.deg < 1 or not prime.is_monic() or not is_irreducible(prime):
            raise DomainError(f"{prime} is not a monic prime")
        out = carlitz_annihilator(P(args.u), prime)
        return (json.dumps({"annihilator": str(out)}) if as_json else str(out)) + "\n", 0
    if cmd in ("zsigmondy", "large"):
        u, m = normalize_pair(P(args.u), P(args.m))
        if cmd == "zsigmondy":
            primes = zsigmondy_primes(u, m)
            if as_json:
                return json.dumps({**_pair_dict(u, m), "zsigmondy": [str(p) for p in primes]}) + "\n", 0
            return "".join(f"{p}\n" for p in primes), 0
        large = large_zsigmondy_primes(u, m)
        if as_json:
            body = [{"prime": str(p), "reason": r} for p, r in large]
            return json.dumps({**_pair_dict(u, m), "large": body}) + "\n", 0
        return "".join(f"{p} {r}\n" for p, r in large), 0
    if cmd == "classify":
        rep = classify(P(args.u), P(args.m))
        if as_json:
            return json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n", 0
        d = rep.to_dict()
        lines = [
            f"q = {d['q']}, u = {d['u']}, m = {d['m']}",
            f"Psi_m(u) = {d['psi']}",
            "zsigmondy: " + (", ".join(d["zsigmondy"]) or "none"),
            "large: " + (", ".join(f"{x['prime']} ({x['reason']})" for x in d["large"]) or "none"),
            "non-zsigmondy: " + (", ".join(f"{x['prime']} (s = {x['s']})" for x in d["non_zsigmondy"]) or "none"),
            f"m+1 unique zsigmondy: {d['m_plus_one_unique']}",
        ]
        return "\n".join(lines) + "\n", 0
    if cmd == "verify":
        bounds = SearchBounds(F.q, args.max_deg_m, args.max_deg_u)
        fn = verify_bang_zsigmondy if args.theorem == "bang" else verify_feit
        report = fn(bounds, workers=max(1, args.workers))
        code = 0 if report.match else 3
        if as_json:
            return report.to_json(), code
        lines = [f"theorem {report.theorem}, q = {F.q}, deg m <= {bounds.max_deg_m}, "
                 f"deg u <= {bounds.max_deg_u}: {report.pairs_checked} pairs"]
        lines += [f"  exception u = {u}, m = {m}" for u, m in report.exception_pairs()]
        lines.append(f"match = {str(report.match).lower()}")
        return "\n".join(lines) + "\n", code
    if cmd == "xset":
        pairs = exceptional_set(args.name, F.q, max_s=args.max_s)
        if as_json:
            body = {"set": args.name.upper(), "q": F.q, "members": [_pair_dict(u, m) for u, m in pairs]}
            return json.dumps(body, indent=2, sort_keys=True) + "\n", 0
        return "".join(f"u = {u}, m = {m}\n" for u, m in pairs), 0
    raise _UsageError(f"unknown command {cmd}")


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run the CLI; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(argv)
        text, code = _dispatch(args)
    except (_UsageError, ParseError) as exc:
        return 2, "", f"error: {exc}\n"
    except DomainError as exc:
        return 1, "", f"error: {exc}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return code, "", ""
    return code, text, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
