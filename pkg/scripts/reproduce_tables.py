#!/usr/bin/env python3
"""Print the two C_m(1) factorization tables and diff them against the golden fixtures."""
import argparse
import json
import sys
from pathlib import Path

from fqcarlitz import field_from_q, parse_poly
from fqcarlitz.verify import reproduce_table, table_to_json

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def agrees(which: int) -> bool:
    ref = json.loads((FIXTURES / f"table{which}_q{3 if which == 2 else 4}.json").read_text())
    F = field_from_q(ref["q"])
    rows = reproduce_table(which)
    for row, r in zip(rows, ref["rows"]):
        want = {(parse_poly(p, F), e) for p, e in r["factorization"]}
        if set(row.factorization) != want:
            return False
    return len(rows) == len(ref["rows"])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="print the JSON documents instead")
    args = ap.parse_args()
    ok = True
    for which in (2, 3):
        rows = reproduce_table(which)
        if args.json:
            sys.stdout.write(table_to_json(which, rows))
        else:
            print(f"table {which}")
            for r in rows:
                fac = " ".join(f"({p})^{e}" for p, e in r.factorization)
                print(f"  p = {str(r.prime):<8} m = {str(r.m):<12} C_m(1) = {fac}")
        same = agrees(which)
        ok &= same
        print(f"table {which}: {'matches' if same else 'DIFFERS FROM'} fixture", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
