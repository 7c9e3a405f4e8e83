"""Integer conics, their boundary behaviour, and Pell-type point orbits."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DegenerateConic, DomainError, NotPellType, PreconditionError
from .exact_arith import content, is_square
from .pell import PellSolution, PellUnit, UnitTooLarge, fundamental_unit, orbit_step

Point = Tuple[int, int]


class BoundaryType(enum.Enum):
    REAL_QUADRATIC = "RealQuadratic"
    IMAGINARY_QUADRATIC = "ImaginaryQuadratic"
    TWO_RATIONAL = "TwoRational"
    DOUBLE_RATIONAL = "DoubleRational"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BinaryForm:
    """A x0^2 + B x0 x1 + C x1^2."""

    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, x0, x1):
        return self.A * x0 * x0 + self.B * x0 * x1 + self.C * x1 * x1


def boundary_classify(form: BinaryForm) -> BoundaryType:
    if form.A == form.B == form.C == 0:
        raise DomainError("zero binary form")
    d = form.disc
    if d < 0:
        return BoundaryType.IMAGINARY_QUADRATIC
    if d == 0:
        return BoundaryType.DOUBLE_RATIONAL
    if is_square(d) is not None:
        return BoundaryType.TWO_RATIONAL
    return BoundaryType.REAL_QUADRATIC


@dataclass(frozen=True)
class TernaryForm:
    """Quadratic form v^T G v; off-diagonal Gram entries may be half-integers."""

    gram: Tuple[Tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        g = tuple(tuple(Fraction(e) for e in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        for i in range(3):
            for j in range(3):
                if g[i][j] != g[j][i]:
                    raise DomainError("Gram matrix must be symmetric")
                if (2 * g[i][j]).denominator != 1:
                    raise DomainError("2*Gram must be integral")

    @classmethod
    def from_coeffs(cls, c00, c11, c22, c01=0, c02=0, c12=0) -> "TernaryForm":
        """From c00 x0^2 + c11 x1^2 + c22 x2^2 + c01 x0x1 + c02 x0x2 + c12 x1x2."""
        h = Fraction(1, 2)
        return cls((
            (Fraction(c00), c01 * h, c02 * h),
            (c01 * h, Fraction(c11), c12 * h),
            (c02 * h, c12 * h, Fraction(c22)),
        ))

    def __call__(self, v: Sequence[int]):
        g = self.gram
        val = sum(g[i][j] * v[i] * v[j] for i in range(3) for j in range(3))
        return val.numerator if val.denominator == 1 else val

    def boundary(self) -> BinaryForm:
        """Restriction to x2 = 0."""
        g = self.gram
        return BinaryForm(int(g[0][0]), int(2 * g[0][1]), int(g[1][1]))

    def affine(self) -> "AffineConic":
        g = self.gram
        return AffineConic(int(g[0][0]), int(2 * g[0][1]), int(g[1][1]),
                           int(2 * g[0][2]), int(2 * g[1][2]), int(g[2][2]))


def ternary_det(T: TernaryForm) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = T.gram
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class AffineConic:
    """a x^2 + b x y + c y^2 + d x + e y + f = 0, content divided out.

    Coefficients are normalised so their gcd is 1 and the first nonzero one
    is positive; construction does this automatically.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        coeffs = (self.a, self.b, self.c, self.d, self.e, self.f)
        if not any(coeffs):
            raise DegenerateConic("all coefficients are zero")
        g = content(*coeffs)
        if g != 1:
            for name, v in zip("abcdef", coeffs):
                object.__setattr__(self, name, v // g)

    @property
    def coeffs(self) -> Tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @property
    def disc2(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y):
        a, b, c, d, e, f = self.coeffs
        return a * x * x + b * x * y + c * y * y + d * x + e * y + f

    def contains(self, p: Point) -> bool:
        return self(*p) == 0

    def boundary_form(self) -> BinaryForm:
        return BinaryForm(self.a, self.b, self.c)

    def swapped(self) -> "AffineConic":
        a, b, c, d, e, f = self.coeffs
        return AffineConic(c, b, a, e, d, f)

    def __str__(self):
        terms = []
        for coef, mono in zip(self.coeffs, ("x^2", "x*y", "y^2", "x", "y", "")):
            if coef:
                terms.append(f"{coef}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") + " = 0"


@dataclass(frozen=True)
class PellSystem:
    """U^2 - D V^2 = N attached to an affine conic.

    U = D y - k and V = 2a x + b y + d with k = 2ae - bd, computed on the
    coordinate-swapped conic when ``swapped`` is set.
    """

    conic: AffineConic
    D: int
    N: int
    swapped: bool = False
    _work: AffineConic = field(default=None, repr=False, compare=False)

    @property
    def k(self) -> int:
        w = self._work
        return 2 * w.a * w.e - w.b * w.d

    def forward(self, p: Point) -> PellSolution:
        x, y = (p[1], p[0]) if self.swapped else p
        w = self._work
        return PellSolution(self.D * y - self.k, 2 * w.a * x + w.b * y + w.d)

    def backward(self, sol: PellSolution) -> Optional[Point]:
        """Inverse of ``forward``; None when the preimage is not integral."""
        w = self._work
        num = sol.U + self.k
        if num % self.D:
            return None
        y = num // self.D
        num = sol.V - w.b * y - w.d
        if num % (2 * w.a):
            return None
        x = num // (2 * w.a)
        return (y, x) if self.swapped else (x, y)


def _identity_holds(work: AffineConic, D: int, N: int) -> bool:
    # (Dy - k)^2 - D (2ax + by + d)^2 - N == -4aD * conic(x, y) as polynomials.
    # Both sides have degree <= 2 in each variable, so agreement on a 3x3 grid
    # is agreement of all coefficients.
    a, b, c, d, e, f = work.coeffs
    k = 2 * a * e - b * d
    for x in range(3):
        for y in range(3):
            lhs = (D * y - k) ** 2 - D * (2 * a * x + b * y + d) ** 2 - N
            if lhs != -4 * a * D * work(x, y):
                return False
    return True


def pell_reduce(K: AffineConic) -> PellSystem:
    if K.a == 0 and K.c == 0:
        raise DegenerateConic(f"conic {K} has no square terms")
    D = K.disc2
    if D <= 0 or is_square(D) is not None:
        raise NotPellType(f"binary discriminant {D} is not positive nonsquare")
    swapped = K.a == 0
    work = K.swapped() if swapped else K
    a, b, c, d, e, f = work.coeffs
    k = 2 * a * e - b * d
    N = k * k + D * (4 * a * f - d * d)
    if not _identity_holds(work, D, N):
        raise AssertionError("Pell reduction identity failed")
    return PellSystem(K, D, N, swapped, work)


def integral_orbit(K: AffineConic, seed: Point, count: int, direction: int = 1,
                   max_bits: Optional[int] = None, unit: Optional[PellUnit] = None,
                   max_steps: int = 100_000) -> List[Point]:
    """Integral points reached from ``seed`` by the unit action.

    Iterates the Pell unit on the reduced system and keeps the iterates that
    pull back to integer points.  Stops after ``count`` points, when
    coordinates pass ``max_bits``, or after ``max_steps`` unit applications.
    """
    if not K.contains(seed):
        raise PreconditionError(f"seed {seed} is not on {K}")
    system = pell_reduce(K)
    if unit is None:
        unit = fundamental_unit(system.D, max_bits)
    cur = system.forward(seed)
    out: List[Point] = []
    for _ in range(max_steps):
        if len(out) >= count:
            break
        cur = orbit_step(system.D, unit, cur, direction)
        if max_bits is not None and max(abs(cur.U), abs(cur.V)).bit_length() > max_bits:
            break
        p = system.backward(cur)
        if p is not None:
            if not K.contains(p):
                raise AssertionError(f"orbit point {p} left the conic")
            out.append(p)
    return out


def bounded_points(K: AffineConic, bound: int) -> List[Point]:
    """All integer points with |x|, |y| <= bound, by scanning x."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    a, b, c, d, e, f = K.coeffs
    out = set()
    for x in range(-bound, bound + 1):
        # c y^2 + B y + C0 = 0
        B = b * x + e
        C0 = a * x * x + d * x + f
        if c == 0:
            if B == 0:
                if C0 == 0:
                    out.update((x, y) for y in range(-bound, bound + 1))
                continue
            if C0 % B == 0:
                y = -C0 // B
                if abs(y) <= bound:
                    out.add((x, y))
            continue
        disc = B * B - 4 * c * C0
        r = is_square(disc)
        if r is None:
            continue
        for num in (-B + r, -B - r):
            if num % (2 * c) == 0:
                y = num // (2 * c)
                if abs(y) <= bound:
                    out.add((x, y))
    return sorted(out)


def boundary_value(K: AffineConic, p: Point) -> Fraction:
    """|A + B tau + C tau^2| with tau = y/x for the boundary form (A, B, C)."""
    x, y = p
    if x == 0:
        raise DomainError("tau undefined at x = 0")
    tau = Fraction(y, x)
    return abs(K.a + K.b * tau + K.c * tau * tau)


__all__ = [
    "AffineConic", "BinaryForm", "BoundaryType", "PellSystem", "TernaryForm",
    "UnitTooLarge", "boundary_classify", "boundary_value", "bounded_points",
    "integral_orbit", "pell_reduce", "ternary_det",
]
