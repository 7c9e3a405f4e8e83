"""Command-line front end.

Exit codes: 0 success, 1 domain error (unsupported n, no good seed, invalid
solution), 2 usage error.  Data goes to stdout, diagnostics to stderr.
Negative values after an option need the ``--opt=-1,2,3`` form.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .conic import boundary_classify, ternary_det
from .cubes import CubeSolution, cube_entry_record, cube_generate
from .engine import (
    GenConfig,
    LedgerEntry,
    Provenance,
    dump_line,
    entry_to_record,
    read_ledger,
    run_generation,
)
from .errors import DomainError, NoGoodSeed
from .exact_arith import allow_big_decimals
from .pell import fundamental_unit, general_reps, orbit_step, sign_closure
from .seeds import brute_search, fauquembergue_identity_holds, n1_stream
from .surface import (
    CaseKind,
    Fiber,
    Solution,
    boundary_of_fiber,
    classify,
    fiber_conic,
    fiber_determinant_check,
    goodness,
    pi1,
    factored_determinant,
    verify_solution,
)


def _triple(text: str):
    try:
        a, b, c = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return a, b, c


def cmd_classify(args) -> int:
    cases = classify(args.n)
    if not cases:
        print("none")
    for c in cases:
        print(c)
    return 0


def cmd_search(args) -> int:
    sols = brute_search(args.n, args.bound, jobs=args.jobs)
    cases = classify(args.n) if args.n != 0 else []
    for i, sol in enumerate(sols):
        if cases:
            case = next((c for c in cases if goodness(c, sol).good), cases[0])
            e = LedgerEntry(i, sol, case, pi1(case, sol), 0, None, Provenance.SEED)
            print(dump_line(entry_to_record(e)))
        else:
            rec = {"id": str(i), "n": str(sol.n), "x": str(sol.x), "y": str(sol.y),
                   "w": str(sol.w), "case": None, "m": None, "fiber": None,
                   "depth": "0", "parent": None, "provenance": Provenance.SEED.value}
            print(dump_line(rec))
    print(f"{len(sols)} solutions", file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    n, x, y, w = args.n, args.x, args.y, args.w
    if not verify_solution(n, x, y, w):
        print(f"invalid; {x}^4 + {y}^4 - {w}^2 = {x ** 4 + y ** 4 - w * w}")
        return 1
    cases = classify(n) if n != 0 else []
    if not cases:
        print("valid; no conic bundle")
        return 0
    sol = Solution(n, x, y, w)
    for c in cases:
        rep = goodness(c, sol)
        line = f"valid; case {c.kind.value} m={c.m}; s={rep.s_raw} t={rep.t_raw}; good={str(rep.good).lower()}"
        if rep.case != c or rep.geiser_applied or rep.swap_applied:
            line += (f"; variant m={rep.case.m} geiser={str(rep.geiser_applied).lower()}"
                     f" swap={str(rep.swap_applied).lower()}")
        print(line)
    return 0


def cmd_fiber(args) -> int:
    case = CaseKind.parse(args.case, args.m)
    if case.n != args.n:
        raise DomainError(f"case {case} gives n={case.n}, not {args.n}")
    fiber = Fiber(case, args.s, args.t)
    conic, T = fiber_conic(case, fiber)
    form = boundary_of_fiber(case, fiber)
    print(f"fiber {fiber} case {case}")
    print(f"conic {conic}")
    print(f"gram_det {ternary_det(T)}")
    print(f"factored_det {factored_determinant(case, fiber.s, fiber.t)}")
    print(f"det_match {str(fiber_determinant_check(case, fiber)).lower()}")
    print(f"boundary {boundary_classify(form)} disc={form.disc}")
    return 0


def cmd_pell(args) -> int:
    unit = fundamental_unit(args.D)
    print(f"unit u={unit.u} v={unit.v}")
    if args.N is None:
        return 0
    reps = general_reps(args.D, args.N, unit)
    if not reps:
        print("no solutions")
    for r in reps:
        print(f"rep U={r.U} V={r.V}")
    if args.count:
        for r in sign_closure(reps):
            cur = r
            for _ in range(args.count):
                cur = orbit_step(args.D, unit, cur, 1)
                print(f"orbit U={cur.U} V={cur.V}")
    return 0


def cmd_generate(args) -> int:
    seeds = [Solution(args.n, *s) for s in (args.seed or [])]
    resume = read_ledger(args.resume) if args.resume else []
    if not seeds and not resume:
        raise DomainError("need at least one --seed or --resume")
    cfg = GenConfig(max_depth=args.depth, per_fiber=args.per_fiber, max_bits=args.max_bits)
    res = run_generation(args.n, seeds, cfg, resume=resume)
    lines = [dump_line(entry_to_record(e)) + "\n" for e in res.entries]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(lines)
    else:
        sys.stdout.writelines(lines)
    print(f"{len(res.entries)} solutions on {len(res.fibers)} fibres; "
          f"{len(res.skipped)} fibres skipped", file=sys.stderr)
    return 0


def cmd_cubes(args) -> int:
    x, y, z = args.seed
    total = x ** 3 + y ** 3 + z ** 3
    if total == 1:
        x, y, z = -x, -y, -z
    elif total != -1:
        raise DomainError(f"{args.seed} sums to {total}, not 1 or -1")
    run = cube_generate(CubeSolution(x, y, z), depth=args.depth, per_fiber=args.per_fiber,
                        max_bits=args.max_bits)
    for e in run.entries:
        print(dump_line(cube_entry_record(e)))
    print(f"{run.distinct()} solutions up to permutation", file=sys.stderr)
    return 0


def cmd_verify_identity(args) -> int:
    ok = fauquembergue_identity_holds()
    print(f"identity {'ok' if ok else 'FAILED'}")
    for sol in n1_stream(args.count):
        ok = ok and verify_solution(sol.n, sol.x, sol.y, sol.w)
        print(f"n=1 x={sol.x} y={sol.y} w={sol.w}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nearmiss", description="Solutions of x^4 + y^4 - w^2 = n via conic bundles")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="conic-bundle cases for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="brute-force seeds with 0 <= x <= y <= bound")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", help="verify a solution and test goodness")
    for name in ("n", "x", "y", "w"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fiber", help="describe one fibre conic")
    p.add_argument("n", type=int)
    p.add_argument("--case", required=True, choices=["square", "2m^2", "-2m^2", "-4m^4", "m^4"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("pell", help="fundamental unit and class representatives")
    p.add_argument("D", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--count", type=int, default=0)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("generate", help="double-fibration generation from seeds")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=_triple, action="append")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--per-fiber", type=int, default=2)
    p.add_argument("--max-bits", type=int, default=4096)
    p.add_argument("--out")
    p.add_argument("--resume")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("cubes", help="sums of three cubes equal to 1 from a seed")
    p.add_argument("--seed", type=_triple, required=True)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--per-fiber", type=int, default=3)
    p.add_argument("--max-bits", type=int, default=4096)
    p.set_defaults(func=cmd_cubes)

    p = sub.add_parser("verify-identity", help="check the Fauquembergue identity")
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_verify_identity)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    allow_big_decimals()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoGoodSeed as exc:
        print(f"error: {exc}", file=sys.stderr)
        for rep in exc.reports:
            print(f"  {rep.case}: fiber {rep.fiber} boundary {rep.boundary} good={rep.good}",
                  file=sys.stderr)
        return 1
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
