"""Breadth-first solution generation by alternating between fibrations.

Starting from seed solutions, every fibre through a known solution that has
real quadratic boundary is walked with its Pell orbit; each new solution is
then pushed through the Geiser involution and the x <-> y swap to reach
fibres of the dual fibrations, and so on up to ``max_depth`` switches.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .conic import BoundaryType, boundary_classify, integral_orbit, ternary_det
from .errors import DomainError, NoGoodSeed, UnsupportedN
from .exact_arith import allow_big_decimals
from .pell import PellUnit, UnitTooLarge, fundamental_unit
from .surface import (
    CaseKind,
    Fiber,
    Solution,
    boundary_of_fiber,
    classify,
    fiber_conic,
    geiser,
    goodness,
    pi1,
    recover_solution,
    sym_orbit,
)

log = logging.getLogger(__name__)


class Provenance(enum.Enum):
    SEED = "Seed"
    PELL_ORBIT = "PellOrbit"
    GEISER_SWITCH = "GeiserSwitch"
    SYMMETRY = "Symmetry"


@dataclass(frozen=True)
class GenConfig:
    max_depth: int = 1
    per_fiber: int = 2
    max_bits: int = 4096
    dedupe: bool = True

    def __post_init__(self):
        if self.max_depth < 0:
            raise DomainError("max_depth must be >= 0")
        if self.per_fiber < 1:
            raise DomainError("per_fiber must be >= 1")
        if self.max_bits < 64:
            raise DomainError("max_bits must be >= 64")


@dataclass(frozen=True)
class LedgerEntry:
    id: int
    solution: Solution
    case: CaseKind
    fiber: Fiber
    depth: int
    parent: Optional[int]
    provenance: Provenance


@dataclass(frozen=True)
class Transform:
    geiser: bool = False
    swap: bool = False

    def apply(self, sol: Solution) -> Solution:
        if self.geiser:
            sol = geiser(sol)
        if self.swap:
            sol = sol.swap()
        return sol

    def __str__(self):
        parts = [name for name, on in (("geiser", self.geiser), ("swap", self.swap)) if on]
        return "+".join(parts) or "identity"


TRANSFORMS = (Transform(), Transform(geiser=True), Transform(swap=True), Transform(True, True))


def neighbor_fibers(case: CaseKind, sol: Solution) -> List[Tuple[Fiber, Transform]]:
    """pi1-fibres through sol, its Geiser image and their x <-> y swaps.

    Fibres reached by more than one transform are listed once, with the
    first transform in the order identity, geiser, swap, geiser+swap.
    """
    out = []
    seen = set()
    for tr in TRANSFORMS:
        f = pi1(case, tr.apply(sol))
        if f not in seen:
            seen.add(f)
            out.append((f, tr))
    return out


@dataclass(frozen=True)
class SkippedFiber:
    fiber: Fiber
    reason: str


@dataclass
class GenerationResult:
    entries: List[LedgerEntry]
    skipped: List[SkippedFiber] = field(default_factory=list)
    truncated: bool = False

    @property
    def fibers(self) -> set:
        return {e.fiber for e in self.entries}


def _fiber_key(fiber: Fiber):
    # m^4 cases reuse the square row, so key on the row actually used
    return (fiber.case.row, fiber.case.row_m, fiber.s, fiber.t)


def _sort_key(sol: Solution, depth: int):
    return (depth, abs(sol.x) + abs(sol.y), (sol.x, sol.y, sol.w))


class _Builder:
    def __init__(self, n: int, cfg: GenConfig):
        self.n = n
        self.cfg = cfg
        self.cases = classify(n)
        self.records: Dict[int, dict] = {}
        self.by_key: Dict[tuple, int] = {}
        self.walked = set()
        self.skipped: List[SkippedFiber] = []
        self.truncated = False
        self._next = 0

    def key(self, sol: Solution):
        return sol.key if self.cfg.dedupe else (sol.x, sol.y, sol.w)

    def add(self, sol, case, fiber, depth, parent, prov) -> Optional[int]:
        k = self.key(sol)
        if k in self.by_key:
            return None
        if not (sol.x ** 4 + sol.y ** 4 - sol.w ** 2 == self.n):
            raise AssertionError(f"generated non-solution {sol}")
        rid = self._next
        self._next += 1
        self.records[rid] = dict(solution=sol, case=case, fiber=fiber, depth=depth,
                                 parent=parent, provenance=prov)
        self.by_key[k] = rid
        if not self.cfg.dedupe and prov is not Provenance.SYMMETRY:
            for img in sorted(sym_orbit(sol), key=lambda s: (s.x, s.y, s.w)):
                self.add(img, case, pi1(case, img), depth, rid, Provenance.SYMMETRY)
        return rid

    def _fiber_usable(self, fiber: Fiber) -> Optional[str]:
        btype = boundary_classify(boundary_of_fiber(fiber.case, fiber))
        if btype is not BoundaryType.REAL_QUADRATIC:
            return str(btype)
        _, T = fiber_conic(fiber.case, fiber)
        if ternary_det(T) == 0:
            return "singular fibre"
        return None

    def _unit_for(self, fiber: Fiber, conic, seed_bits: int) -> Optional[PellUnit]:
        reason = self._fiber_usable(fiber)
        if reason is None:
            budget = self.cfg.max_bits - seed_bits
            try:
                return fundamental_unit(conic.disc2, max_bits=max(budget, 1))
            except UnitTooLarge:
                self.truncated = True
                reason = "unit exceeds max_bits"
        self.skipped.append(SkippedFiber(fiber, reason))
        log.debug("skip fiber %s (%s): %s", fiber, fiber.case, reason)
        return None

    def walk_fiber(self, fiber: Fiber, start: Solution) -> List[Solution]:
        """Orbit points on ``fiber`` from ``start``, both directions."""
        conic, _ = fiber_conic(fiber.case, fiber)
        seed_bits = max(abs(start.x), abs(start.y)).bit_length()
        unit = self._unit_for(fiber, conic, seed_bits)
        if unit is None:
            return []
        found = []
        for direction in (1, -1):
            pts = integral_orbit(conic, (start.x, start.y), self.cfg.per_fiber, direction,
                                 max_bits=self.cfg.max_bits, unit=unit)
            if len(pts) < self.cfg.per_fiber:
                self.truncated = True
            for p in pts:
                sol = recover_solution(fiber.case, fiber, p)
                if sol is None:
                    raise AssertionError(f"integral conic point {p} did not lift on {fiber}")
                found.append(sol)
        return found

    def expand(self, rid: int) -> List[int]:
        rec = self.records[rid]
        sol, depth = rec["solution"], rec["depth"]
        children = []
        for case in self.cases:
            for fiber, tr in neighbor_fibers(case, sol):
                same = fiber == rec["fiber"]
                if not same and depth >= self.cfg.max_depth:
                    continue
                # each fibre is walked once, from the first solution reaching it;
                # per_fiber caps the points taken from that fibre
                fkey = _fiber_key(fiber)
                if fkey in self.walked:
                    continue
                self.walked.add(fkey)
                start = tr.apply(sol)
                prov = Provenance.PELL_ORBIT if same else Provenance.GEISER_SWITCH
                child_depth = depth if same else depth + 1
                for new in self.walk_fiber(fiber, start):
                    cid = self.add(new, case, fiber, child_depth, rid, prov)
                    if cid is not None:
                        children.append(cid)
        return children

    def run(self, start_ids: Sequence[int]):
        levels: Dict[int, List[int]] = {}
        for rid in start_ids:
            levels.setdefault(self.records[rid]["depth"], []).append(rid)
        depth = min(levels) if levels else 0
        while depth in levels:
            queue = sorted(levels.pop(depth), key=self._rid_key)
            i = 0
            while i < len(queue):
                for cid in self.expand(queue[i]):
                    d = self.records[cid]["depth"]
                    if self.records[cid]["provenance"] is Provenance.SYMMETRY:
                        continue
                    if d == depth:
                        queue.append(cid)
                    else:
                        levels.setdefault(d, []).append(cid)
                i += 1
            depth += 1

    def _rid_key(self, rid):
        r = self.records[rid]
        return _sort_key(r["solution"], r["depth"])

    def entries(self) -> List[LedgerEntry]:
        order = sorted(self.records, key=self._rid_key)
        new_id = {rid: i for i, rid in enumerate(order)}
        out = []
        for rid in order:
            r = self.records[rid]
            parent = new_id[r["parent"]] if r["parent"] is not None else None
            out.append(LedgerEntry(new_id[rid], r["solution"], r["case"], r["fiber"],
                                   r["depth"], parent, r["provenance"]))
        return out


def run_generation(n: int, seeds: Iterable[Solution], cfg: GenConfig = GenConfig(),
                   resume: Sequence[LedgerEntry] = ()) -> GenerationResult:
    """Like ``generate`` but also returns skipped fibres and truncation status."""
    cases = classify(n) if n != 0 else []
    if not cases:
        raise UnsupportedN(f"x^4 + y^4 - w^2 = {n} has no conic bundle")
    b = _Builder(n, cfg)

    start = []
    # resumed entries keep their depth and provenance; their ids are remapped
    old_to_new = {}
    for e in sorted(resume, key=lambda e: e.id):
        if e.solution.n != n:
            raise DomainError(f"ledger entry {e.id} is for n={e.solution.n}, not {n}")
        parent = old_to_new.get(e.parent) if e.parent is not None else None
        rid = b.add(e.solution, e.case, e.fiber, e.depth, parent, e.provenance)
        if rid is not None:
            old_to_new[e.id] = rid
            start.append(rid)

    seeds = sorted(set(seeds), key=lambda s: _sort_key(s, 0))
    reports = []
    any_good = bool(resume)
    for sol in seeds:
        if sol.n != n:
            raise DomainError(f"seed {sol} is not a solution for n={n}")
        rep = next((r for r in (goodness(c, sol) for c in cases) if r.good), None)
        if rep is None:
            reports.extend(goodness(c, sol) for c in cases)
            case = cases[0]
            fiber = pi1(case, sol)
        else:
            any_good = True
            # goodness may have moved to a variant fibre; the seed's own fibre is what we walk
            case = rep.case if rep.case.n == n else cases[0]
            fiber = pi1(case, sol)
        rid = b.add(sol, case, fiber, 0, None, Provenance.SEED)
        if rid is not None:
            start.append(rid)
    if not any_good:
        raise NoGoodSeed(f"no seed is good for n={n}", reports)

    b.run(start)
    return GenerationResult(b.entries(), b.skipped, b.truncated)


def generate(n: int, seeds: Iterable[Solution], cfg: GenConfig = GenConfig()) -> List[LedgerEntry]:
    return run_generation(n, seeds, cfg).entries


# ledger files: one JSON object per line, integers as decimal strings

def entry_to_record(e: LedgerEntry) -> dict:
    allow_big_decimals()
    s = e.solution
    return {
        "id": str(e.id),
        "n": str(s.n),
        "x": str(s.x),
        "y": str(s.y),
        "w": str(s.w),
        "case": e.case.kind.value,
        "m": str(e.case.m),
        "fiber": [str(e.fiber.s), str(e.fiber.t)],
        "depth": str(e.depth),
        "parent": None if e.parent is None else str(e.parent),
        "provenance": e.provenance.value,
    }


def record_to_entry(rec: dict) -> LedgerEntry:
    allow_big_decimals()
    case = CaseKind.parse(rec["case"], int(rec["m"]))
    sol = Solution(int(rec["n"]), int(rec["x"]), int(rec["y"]), int(rec["w"]))
    s, t = (int(v) for v in rec["fiber"])
    return LedgerEntry(
        id=int(rec["id"]),
        solution=sol,
        case=case,
        fiber=Fiber(case, s, t),
        depth=int(rec["depth"]),
        parent=None if rec.get("parent") is None else int(rec["parent"]),
        provenance=Provenance(rec["provenance"]),
    )


def dump_line(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False)


def write_ledger(entries: Iterable[LedgerEntry], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for e in entries:
            fh.write(dump_line(entry_to_record(e)) + "\n")


def read_ledger(path) -> List[LedgerEntry]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(record_to_entry(json.loads(line)))
    return out
