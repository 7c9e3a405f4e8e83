"""Exact integer helpers.

Rationals are ``fractions.Fraction`` throughout; it already keeps values in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError

Rat = Fraction


def isqrt(a: int) -> int:
    """floor(sqrt(a)) for a >= 0."""
    if a < 0:
        raise DomainError(f"isqrt of negative number {a}")
    if a < 2:
        return a
    # Newton iteration from an upper bound; strictly decreasing until floor.
    r = 1 << ((a.bit_length() + 1) // 2)
    while True:
        nxt = (r + a // r) // 2
        if nxt >= r:
            break
        r = nxt
    # exact correction
    while r * r > a:
        r -= 1
    while (r + 1) * (r + 1) <= a:
        r += 1
    return r


def is_square(a: int) -> Optional[int]:
    if a < 0:
        return None
    # quadratic residues mod 64 reject most non-squares cheaply
    if (a & 63) not in _QR64:
        return None
    r = isqrt(a)
    return r if r * r == a else None


_QR64 = frozenset((i * i) & 63 for i in range(64))


def fourth_root(a: int) -> Optional[int]:
    r = is_square(a)
    if r is None:
        return None
    return is_square(r)


def primitive_pair(s: int, t: int) -> Tuple[int, int]:
    """Divide out gcd and make the first nonzero entry positive."""
    if s == 0 and t == 0:
        raise DomainError("primitive_pair of (0, 0)")
    g = math.gcd(s, t)
    s, t = s // g, t // g
    if s < 0 or (s == 0 and t < 0):
        s, t = -s, -t
    return s, t


def sign(a: int) -> int:
    return (a > 0) - (a < 0)


def content(*coeffs: int) -> int:
    """gcd of the coefficients, signed so the first nonzero one becomes positive."""
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    if g == 0:
        return 1
    for c in coeffs:
        if c:
            return g if c > 0 else -g
    return g


def allow_big_decimals() -> None:
    """Lift the interpreter's int <-> str digit cap (3.11+); ledger values can exceed it."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
