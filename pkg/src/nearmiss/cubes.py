"""Sums of three cubes on the Fermat cubic x^3 + y^3 + z^3 + w^3 = 0.

Internally w = 1, so points satisfy x^3 + y^3 + z^3 = -1; negating all
three coordinates gives solutions of x^3 + y^3 + z^3 = 1.  The conic bundle
comes from the line x + y = z + w = 0: in coordinates x0 = x + y,
x1 = x - y, x2 = z + w, x3 = z - w it is (x0 : x2), and the fibre over
(1 : t) lies in the plane z = t(x + y) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .conic import AffineConic, integral_orbit, pell_reduce
from .errors import DomainError, NotPellType, PreconditionError
from .exact_arith import is_square, primitive_pair
from .pell import UnitTooLarge, fundamental_unit


@dataclass(frozen=True)
class CubeSolution:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x ** 3 + self.y ** 3 + self.z ** 3 != -1:
            raise DomainError(f"{(self.x, self.y, self.z)} does not satisfy x^3+y^3+z^3 = -1")

    @property
    def public(self) -> Tuple[int, int, int]:
        """The corresponding solution of x^3 + y^3 + z^3 = 1."""
        return (-self.x, -self.y, -self.z)

    @property
    def key(self) -> Tuple[int, int, int]:
        return tuple(sorted((self.x, self.y, self.z)))


@dataclass(frozen=True)
class CubeFiber:
    s: int
    t: int

    def __post_init__(self):
        if (self.s, self.t) != primitive_pair(self.s, self.t):
            raise DomainError(f"({self.s}, {self.t}) is not primitive")


def cube_pi1(sol: CubeSolution) -> CubeFiber:
    x0, x1 = sol.x + sol.y, sol.x - sol.y
    x2, x3 = sol.z + 1, sol.z - 1
    if (x0, x2) != (0, 0):
        return CubeFiber(*primitive_pair(x0, x2))
    s, t = -x2 * x2 - 3 * x3 * x3, x0 * x0 + 3 * x1 * x1
    if (s, t) == (0, 0):
        raise RuntimeError(f"both charts vanish at {sol}")
    return CubeFiber(*primitive_pair(s, t))


def cube_fiber_conic(t: int) -> AffineConic:
    """Residual conic of the fibre over (1 : t) in the plane z = t(x + y) - 1."""
    t3 = t ** 3
    return AffineConic(1 + t3, 2 * t3 - 1, 1 + t3, -3 * t * t, -3 * t * t, 3 * t)


def cube_boundary_value(s: int, t: int) -> int:
    return -s * (s ** 3 + 4 * t ** 3)


def cube_boundary_real(s: int, t: int) -> bool:
    v = cube_boundary_value(s, t)
    return v > 0 and is_square(v) is None


def cube_recover(t: int, point: Tuple[int, int]) -> CubeSolution:
    if not cube_fiber_conic(t).contains(point):
        raise PreconditionError(f"{point} is not on the fibre conic over (1 : {t})")
    x, y = point
    return CubeSolution(x, y, t * (x + y) - 1)


def cube_swap(sol: CubeSolution) -> CubeSolution:
    return CubeSolution(sol.x, sol.z, sol.y)


@dataclass(frozen=True)
class CubeEntry:
    id: int
    solution: CubeSolution
    fiber: CubeFiber
    depth: int
    parent: Optional[int]
    provenance: str


@dataclass
class CubeRun:
    entries: List[CubeEntry]
    skipped: List[Tuple[CubeFiber, str]] = field(default_factory=list)

    def distinct(self) -> int:
        return len({e.solution.key for e in self.entries})


def cube_orbit(sol: CubeSolution, count: int, max_bits: int = 4096) -> List[CubeSolution]:
    """Orbit points on sol's own fibre, both directions, when the fibre is (1 : t)."""
    fib = cube_pi1(sol)
    if fib.s != 1:
        raise DomainError(f"fibre ({fib.s} : {fib.t}) has s != 1; only (1 : t) fibres are walked")
    K = cube_fiber_conic(fib.t)
    unit = fundamental_unit(pell_reduce(K).D, max_bits=max_bits)
    out = []
    for direction in (1, -1):
        for p in integral_orbit(K, (sol.x, sol.y), count, direction, max_bits=max_bits, unit=unit):
            out.append(cube_recover(fib.t, p))
    return out


def cube_generate(seed: CubeSolution, depth: int = 3, per_fiber: int = 3,
                  max_bits: int = 4096) -> CubeRun:
    """Alternate Pell orbits on pi1-fibres with the y <-> z swap.

    Round 0 walks the seed's fibre; each later round swaps every solution
    found in the previous round into the second fibration and walks the
    fibres reached.  Solutions are deduplicated up to permutation.
    """
    entries: List[CubeEntry] = []
    by_key = {}
    walked = set()
    skipped: List[Tuple[CubeFiber, str]] = []

    def add(sol, fiber, d, parent, prov):
        if sol.key in by_key:
            return None
        e = CubeEntry(len(entries), sol, fiber, d, parent, prov)
        entries.append(e)
        by_key[sol.key] = e.id
        return e.id

    def walk(sol, parent, d, prov):
        fib = cube_pi1(sol)
        if (fib.s, fib.t) in walked:
            return []
        walked.add((fib.s, fib.t))
        if fib.s != 1:
            skipped.append((fib, "s != 1"))
            return []
        if not cube_boundary_real(fib.s, fib.t):
            skipped.append((fib, "boundary not real quadratic"))
            return []
        try:
            pts = cube_orbit(sol, per_fiber, max_bits)
        except (UnitTooLarge, NotPellType) as exc:
            skipped.append((fib, str(exc)))
            return []
        new = []
        for p in pts:
            i = add(p, fib, d, parent, prov)
            if i is not None:
                new.append(i)
        return new

    root = add(seed, cube_pi1(seed), 0, None, "Seed")
    frontier = [root] + walk(seed, root, 0, "PellOrbit")
    for d in range(1, depth + 1):
        nxt = []
        for i in frontier:
            sw = cube_swap(entries[i].solution)
            nxt += walk(sw, i, d, "Swap")
        frontier = nxt
    return CubeRun(entries, skipped)


def cube_entry_record(e: CubeEntry) -> dict:
    x, y, z = e.solution.public
    return {
        "equation": "three-cubes",
        "id": str(e.id),
        "n": "1",
        "x": str(x),
        "y": str(y),
        "z": str(z),
        "fiber": [str(e.fiber.s), str(e.fiber.t)],
        "depth": str(e.depth),
        "parent": None if e.parent is None else str(e.parent),
        "provenance": e.provenance,
    }
