"""Continued-fraction machinery for U^2 - D V^2 = N.

Only positive nonsquare D is handled.  Units are found from the period of
the continued fraction of sqrt(D); class representatives for a general N
come from the classical bounded search (Nagell's bounds), which is slow for
large units but trivially auditable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import DomainError
from .exact_arith import is_square, isqrt


class UnitTooLarge(DomainError):
    """Fundamental unit exceeds the requested bit budget."""


@dataclass(frozen=True)
class PellUnit:
    D: int
    u: int
    v: int

    def __post_init__(self):
        if self.u * self.u - self.D * self.v * self.v != 1 or self.u <= 0 or self.v <= 0:
            raise DomainError(f"({self.u}, {self.v}) is not a positive unit for D={self.D}")

    @property
    def bits(self) -> int:
        return self.u.bit_length()


@dataclass(frozen=True)
class PellSolution:
    U: int
    V: int

    def norm(self, D: int) -> int:
        return self.U * self.U - D * self.V * self.V


def _check_D(D: int) -> int:
    if D <= 0:
        raise DomainError(f"D must be positive, got {D}")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise DomainError(f"D={D} is a perfect square")
    return a0


def _cf_terms(D: int) -> Iterator[int]:
    """Partial quotients a1, a2, ... of sqrt(D) (infinite, periodic)."""
    a0 = _check_D(D)
    P, Q, a = 0, 1, a0
    while True:
        P = a * Q - P
        Q = (D - P * P) // Q
        a = (a0 + P) // Q
        yield a


def cf_sqrt(D: int) -> Tuple[int, List[int]]:
    """Return (a0, period) of the continued fraction of sqrt(D)."""
    a0 = _check_D(D)
    period = []
    for a in _cf_terms(D):
        period.append(a)
        if a == 2 * a0:
            return a0, period
    raise AssertionError("unreachable")


def _period_end_convergent(D: int, max_bits: Optional[int]) -> Tuple[int, int, int]:
    """(p, q, L): convergent p/q at the end of the first period, L = period length.

    p^2 - D q^2 = (-1)^L.  Raises UnitTooLarge when p outgrows max_bits.
    """
    a0 = _check_D(D)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    L = 0
    for a in _cf_terms(D):
        L += 1
        if a == 2 * a0:
            return p, q, L
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        if max_bits is not None and p.bit_length() > max_bits:
            raise UnitTooLarge(f"fundamental unit for {D.bit_length()}-bit D exceeds {max_bits} bits")
    raise AssertionError("unreachable")


def fundamental_unit(D: int, max_bits: Optional[int] = None) -> PellUnit:
    """Minimal positive solution of u^2 - D v^2 = 1.

    With ``max_bits`` set, gives up (UnitTooLarge) once the convergents pass
    that size; periods of large D are long and the units astronomically big.
    """
    p, q, L = _period_end_convergent(D, max_bits)
    if L % 2:
        p, q = p * p + D * q * q, 2 * p * q
        if max_bits is not None and p.bit_length() > max_bits:
            raise UnitTooLarge(f"fundamental unit for {D.bit_length()}-bit D exceeds {max_bits} bits")
    return PellUnit(D, p, q)


def negative_fundamental(D: int) -> Optional[Tuple[int, int]]:
    """Minimal positive solution of u^2 - D v^2 = -1, or None."""
    p, q, L = _period_end_convergent(D, None)
    if L % 2 == 0:
        return None
    return p, q


def general_reps(D: int, N: int, unit: Optional[PellUnit] = None) -> List[PellSolution]:
    """One representative (U >= 0, V >= 0) per class of U^2 - D V^2 = N.

    Exhaustive search of V over Nagell's interval; each class or its
    conjugate has a member there, so closing the output under sign changes
    and the unit action recovers every solution.
    """
    if N == 0:
        raise DomainError("N = 0 gives a degenerate conic")
    if unit is None:
        unit = fundamental_unit(D)
    u = unit.u
    # Nagell: N > 0 gives V^2 <= N(u-1)/2D; N < 0 gives |N|/D <= V^2 <= |N|(u+1)/2D
    if N > 0:
        lo = 0
        hi = isqrt(N * (u - 1) // (2 * D))
    else:
        lo_sq = -(N // D)  # ceil(|N| / D)
        lo = isqrt(lo_sq)
        if lo * lo < lo_sq:
            lo += 1
        hi = isqrt(-N * (u + 1) // (2 * D))
    out = []
    for V in range(lo, hi + 1):
        U = is_square(N + D * V * V)
        if U is not None:
            out.append(PellSolution(U, V))
    return out


def orbit_step(D: int, unit: PellUnit, sol: PellSolution, direction: int = 1) -> PellSolution:
    u, v = unit.u, unit.v
    if direction == 1:
        return PellSolution(u * sol.U + D * v * sol.V, v * sol.U + u * sol.V)
    if direction == -1:
        return PellSolution(u * sol.U - D * v * sol.V, -v * sol.U + u * sol.V)
    raise DomainError(f"direction must be +1 or -1, got {direction}")


def sign_closure(reps: List[PellSolution]) -> List[PellSolution]:
    seen = set()
    out = []
    for r in reps:
        for su in (1, -1):
            for sv in (1, -1):
                key = (su * r.U, sv * r.V)
                if key not in seen:
                    seen.add(key)
                    out.append(PellSolution(*key))
    return out


def solutions_up_to(D: int, N: int, vmax: int) -> List[PellSolution]:
    """Every solution with |V| <= vmax, via class representatives and orbits."""
    unit = fundamental_unit(D)
    found = set()
    for rep in sign_closure(general_reps(D, N, unit)):
        for direction in (1, -1):
            cur = rep
            prev = None
            # |V_k| = |A e^k + B e^-k| shape: falls at most once, then rises
            while True:
                a = abs(cur.V)
                if a <= vmax:
                    found.add((cur.U, cur.V))
                elif prev is not None and a > prev:
                    break
                prev = a
                cur = orbit_step(D, unit, cur, direction)
    return [PellSolution(U, V) for U, V in sorted(found, key=lambda p: (abs(p[1]), p))]
