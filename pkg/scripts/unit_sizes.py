"""Fundamental-unit sizes of the dual fibres met during generation.

Explains where generation stalls: the fibres through non-seed orbit points
have discriminants of order x^8 and correspondingly long periods.
"""

import argparse

from nearmiss.conic import BoundaryType, boundary_classify, integral_orbit
from nearmiss.engine import neighbor_fibers
from nearmiss.pell import cf_sqrt, fundamental_unit
from nearmiss.surface import Solution, classify, fiber_conic, recover_solution


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("seed", help="x,y,w")
    ap.add_argument("--points", type=int, default=2)
    args = ap.parse_args()
    x, y, w = (int(v) for v in args.seed.split(","))
    seed = Solution(args.n, x, y, w)
    case = classify(args.n)[0]
    fib = neighbor_fibers(case, seed)[0][0]
    K, _ = fiber_conic(case, fib)
    pts = [(x, y)] + integral_orbit(K, (x, y), args.points, 1, max_bits=4096)
    print(f"case {case}, seed fibre {fib}, D={K.disc2}")
    for p in pts:
        sol = recover_solution(case, fib, p)
        if sol is None:
            continue
        for f, tr in neighbor_fibers(case, sol):
            K2, _ = fiber_conic(case, f)
            if boundary_classify(K2.boundary_form()) is not BoundaryType.REAL_QUADRATIC:
                print(f"  {p} {tr}: fibre {f} boundary not real quadratic")
                continue
            D = K2.disc2
            period = len(cf_sqrt(D)[1])
            bits = fundamental_unit(D).bits if period < 20000 else None
            print(f"  {p} {tr}: fibre {f} D has {D.bit_length()} bits, period {period}, unit {bits} bits")


if __name__ == "__main__":
    main()
