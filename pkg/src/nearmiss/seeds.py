"""Seed solutions: exhaustive small search and Fauquembergue's n = 1 family."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from .exact_arith import is_square
from .pell import negative_fundamental
from .surface import Solution


def _scan(n: int, y_lo: int, y_hi: int) -> List[Tuple[int, int, int]]:
    out = []
    for y in range(y_lo, y_hi):
        y4 = y ** 4
        for x in range(0, y + 1):
            r = x ** 4 + y4 - n
            if r < 0:
                continue
            w = is_square(r)
            if w is not None:
                out.append((x, y, w))
    return out


def brute_search(n: int, bound: int, jobs: int = 1) -> List[Solution]:
    """All solutions with 0 <= x <= y <= bound and w >= 0.

    With jobs > 1 the y-range is cut into contiguous blocks, one per worker;
    results come back sorted, so the output does not depend on ``jobs``.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if jobs <= 1 or bound < 64:
        found = _scan(n, 0, bound + 1)
    else:
        edges = [round(i * (bound + 1) / jobs) for i in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_scan, [n] * jobs, edges[:-1], edges[1:])
            found = [s for part in parts for s in part]
    return [Solution(n, x, y, w) for x, y, w in sorted(found, key=lambda s: (s[1], s[0]))]


def fauquembergue_parts(p: int, q: int) -> Tuple[int, int, int, int]:
    """(x, y, w, r) with x^4 + y^4 = w^2 + r^4, unnormalised signs."""
    x = 17 * p * p - 12 * p * q - 13 * q * q
    y = 17 * p * p + 12 * p * q - 13 * q * q
    w = 289 * p ** 4 + 14 * p * p * q * q - 239 * q ** 4
    r = 17 * p * p - q * q
    return x, y, w, r


def fauquembergue(p: int, q: int) -> Solution:
    if p == 0 and q == 0:
        raise ValueError("(p, q) = (0, 0)")
    x, y, w, r = fauquembergue_parts(p, q)
    return Solution(r ** 4, abs(x), abs(y), abs(w))


def fauquembergue_identity_holds() -> bool:
    """Expand both sides as polynomials in p, q and compare coefficients."""
    import sympy

    p, q = sympy.symbols("p q")
    x, y, w, r = fauquembergue_parts(p, q)
    lhs = sympy.Poly(sympy.expand(x ** 4 + y ** 4), p, q)
    rhs = sympy.Poly(sympy.expand(w ** 2 + r ** 4), p, q)
    return lhs.as_dict() == rhs.as_dict()


def negative_pell_17(count: int) -> List[Tuple[int, int]]:
    """First ``count`` positive (p, q) with q^2 - 17 p^2 = -1.

    These are the odd powers of 4 + sqrt(17); consecutive ones differ by the
    square (33 + 8 sqrt(17)).
    """
    q, p = negative_fundamental(17)
    out = []
    for _ in range(count):
        out.append((p, q))
        q, p = 33 * q + 17 * 8 * p, 8 * q + 33 * p
    return out


def n1_stream(count: int) -> List[Solution]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return [fauquembergue(p, q) for p, q in negative_pell_17(count)]
