"""Sums of three cubes equal to 1 from the seed 9^3 + (-8)^3 + (-6)^3 = 1."""

import argparse

from nearmiss.cubes import CubeSolution, cube_generate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--per-fiber", type=int, default=3)
    args = ap.parse_args()
    seed = CubeSolution(-9, 8, 6)
    for d in range(args.depth + 1):
        run = cube_generate(seed, depth=d, per_fiber=args.per_fiber)
        print(f"depth {d}: {run.distinct()} solutions up to permutation, {len(run.skipped)} fibres skipped")
    for e in run.entries:
        x, y, z = e.solution.public
        tag = f"[{e.provenance} fibre ({e.fiber.s} : {e.fiber.t})]"
        total = x ** 3 + y ** 3 + z ** 3
        if len(str(abs(x))) < 30:
            print(f"  {tag} ({x})^3 + ({y})^3 + ({z})^3 = {total}")
        else:
            print(f"  {tag} {len(str(abs(x)))}-digit solution, sum of cubes = {total}")

if __name__ == "__main__":
    main()
