#!/usr/bin/env python3
"""Tabulate deg Psi_m(u) against the predicted degree over a (q, deg m, deg u) grid."""
import argparse
import sys

from fqcarlitz import Poly, cyclotomic_eval, euler_phi, factorize, field_from_q
from fqcarlitz.polyring import enumerate_monic


def predicted(m, u, q):
    phi = euler_phi(m)
    if u.deg >= 1:
        return u.deg * phi
    fac = factorize(m).factors
    if all(e == 1 for _, e in fac):
        return (phi + (-1) ** (len(fac) + 1)) // q
    return phi // q


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--max-deg-m", type=int, default=3)
    ap.add_argument("--max-deg-u", type=int, default=2)
    args = ap.parse_args()
    bad = 0
    for q in args.q:
        F = field_from_q(q)
        for dm in range(1, args.max_deg_m + 1):
            for du in range(args.max_deg_u + 1):
                us = [Poly.one(F)] if du == 0 else list(enumerate_monic(du, F))
                n = miss = 0
                for m in enumerate_monic(dm, F):
                    for u in us:
                        n += 1
                        miss += cyclotomic_eval(m, u).deg != predicted(m, u, q)
                bad += miss
                print(f"q={q} deg m={dm} deg u={du}: {n:6d} pairs, {miss} violations")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
