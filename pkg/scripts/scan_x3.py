#!/usr/bin/env python3
"""Push the X3 search past s = 7 to look for members the default range would miss."""
import argparse
import sys
import time

from fqcarlitz import exceptional_set


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=11, help="s = 12 needs Psi_m(1) of degree 236196 and is impractical")
    args = ap.parse_args()
    base = exceptional_set("X3", 3, max_s=7)
    t0 = time.perf_counter()
    wide = exceptional_set("X3", 3, max_s=args.max_s)
    new = [m for u, m in wide if (u, m) not in base]
    print(f"s <= 7: {[str(m) for _, m in base]}")
    print(f"s <= {args.max_s}: {len(wide)} members, new: {[str(m) for m in new] or 'none'} "
          f"({time.perf_counter() - t0:.1f} s)")
    return 1 if new else 0


if __name__ == "__main__":
    sys.exit(main())
