#!/usr/bin/env python3
"""Run the bounded Bang-Zsigmondy and Feit checks and write one JSON report per run."""
import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from fqcarlitz import SearchBounds, verify_bang_zsigmondy, verify_feit


@dataclass(frozen=True)
class Run:
    theorem: str
    q: int
    max_deg_m: int
    max_deg_u: int


# the boxes used by the acceptance suite
DEFAULT_RUNS = [
    Run("bang", 3, 3, 2),
    Run("bang", 4, 2, 1),
    Run("bang", 5, 2, 1),
    Run("feit", 3, 3, 1),
    Run("feit", 4, 2, 1),
    Run("feit", 5, 2, 1),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--theorem", choices=("bang", "feit"))
    ap.add_argument("--q", type=int)
    ap.add_argument("--max-deg-m", type=int)
    ap.add_argument("--max-deg-u", type=int)
    args = ap.parse_args()

    if args.theorem:
        if None in (args.q, args.max_deg_m, args.max_deg_u):
            ap.error("a custom run needs --q, --max-deg-m and --max-deg-u")
        runs = [Run(args.theorem, args.q, args.max_deg_m, args.max_deg_u)]
    else:
        runs = DEFAULT_RUNS

    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for run in runs:
        bounds = SearchBounds(run.q, run.max_deg_m, run.max_deg_u)
        fn = verify_bang_zsigmondy if run.theorem == "bang" else verify_feit
        t0 = time.perf_counter()
        report = fn(bounds, workers=args.workers)
        dt = time.perf_counter() - t0
        path = args.out / f"{run.theorem}_q{run.q}_m{run.max_deg_m}_u{run.max_deg_u}.json"
        path.write_text(report.to_json())
        failed += not report.match
        print(f"{run.theorem:5} q={run.q} deg m<={run.max_deg_m} deg u<={run.max_deg_u}: "
              f"{report.pairs_checked:6d} pairs, {len(report.exceptions):2d} exceptions, "
              f"match={report.match} ({dt:.1f} s) -> {path}")
    return 3 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
