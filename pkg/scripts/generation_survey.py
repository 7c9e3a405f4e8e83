"""Distinct solutions and fibres reached per seed as depth and bit budget vary.

    python scripts/generation_survey.py --depths 0 1 2 3 --max-bits 4096 8192
"""

import argparse
import time
from collections import Counter

from nearmiss.engine import GenConfig, run_generation
from nearmiss.surface import Solution

ROWS = [(1, 5, 7, 55), (2, 15, 33, 1112), (-2, 47, 39, 2682), (-4, 2, 2, 6), (8, 3, 6, 37), (25, 5, 5, 35)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depths", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--per-fiber", type=int, default=3)
    ap.add_argument("--max-bits", type=int, nargs="+", default=[4096])
    ap.add_argument("--n", type=int, nargs="*", help="restrict to these n")
    args = ap.parse_args()

    print("n\tmax_bits\tdepth\tsolutions\tfibres\tskipped\tseconds\tskip reasons")
    for row in ROWS:
        if args.n and row[0] not in args.n:
            continue
        for bits in args.max_bits:
            for depth in args.depths:
                cfg = GenConfig(max_depth=depth, per_fiber=args.per_fiber, max_bits=bits)
                t0 = time.perf_counter()
                res = run_generation(row[0], [Solution(*row)], cfg)
                dt = time.perf_counter() - t0
                reasons = Counter(s.reason for s in res.skipped)
                print(f"{row[0]}\t{bits}\t{depth}\t{len(res.entries)}\t{len(res.fibers)}\t"
                      f"{len(res.skipped)}\t{dt:.1f}\t{dict(reasons)}", flush=True)


if __name__ == "__main__":
    main()
