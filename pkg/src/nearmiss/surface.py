"""The surfaces x^4 + y^4 - w^2 = n and their conic bundles.

Each supported n carries an explicit fibration (x, y, w) -> (s : t) onto the
projective line whose fibres are plane conics in (x0, x1, x2) = (x, y, z).
Everything here works on the affine chart z = 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .conic import (
    AffineConic,
    BinaryForm,
    BoundaryType,
    TernaryForm,
    boundary_classify,
    ternary_det,
)
from .errors import DomainError, PreconditionError
from .exact_arith import fourth_root, is_square, primitive_pair, sign


@dataclass(frozen=True, order=True)
class Solution:
    n: int
    x: int
    y: int
    w: int

    def __post_init__(self):
        if not verify_solution(self.n, self.x, self.y, self.w):
            raise DomainError(f"({self.x}, {self.y}, {self.w}) does not solve x^4+y^4-w^2={self.n}")

    @property
    def key(self) -> Tuple[int, int, int]:
        """Canonical class under sign changes and x <-> y."""
        a, b = sorted((abs(self.x), abs(self.y)))
        return (a, b, abs(self.w))

    def swap(self) -> "Solution":
        return Solution(self.n, self.y, self.x, self.w)


def verify_solution(n: int, x: int, y: int, w: int) -> bool:
    return x ** 4 + y ** 4 - w * w == n


class Kind(enum.Enum):
    SQUARE = "square"  # n = m^2
    TWO_SQUARE = "2m^2"  # n = 2 m^2
    MINUS_TWO_SQUARE = "-2m^2"  # n = -2 m^2
    MINUS_FOUR_FOURTH = "-4m^4"  # n = -4 m^4
    FOURTH_POWER = "m^4"  # n = m^4, handled as SQUARE with m -> sign(m) m^2


@dataclass(frozen=True)
class CaseKind:
    kind: Kind
    m: int

    def __post_init__(self):
        if self.m == 0:
            raise DomainError("m must be nonzero")

    @property
    def n(self) -> int:
        m = self.m
        return {
            Kind.SQUARE: m * m,
            Kind.TWO_SQUARE: 2 * m * m,
            Kind.MINUS_TWO_SQUARE: -2 * m * m,
            Kind.MINUS_FOUR_FOURTH: -4 * m ** 4,
            Kind.FOURTH_POWER: m ** 4,
        }[self.kind]

    @property
    def row(self) -> Kind:
        """Which bundle row the case uses."""
        return Kind.SQUARE if self.kind is Kind.FOURTH_POWER else self.kind

    @property
    def row_m(self) -> int:
        """The m that enters the row equations."""
        if self.kind is Kind.FOURTH_POWER:
            return sign(self.m) * self.m * self.m
        return self.m

    @property
    def sort_key(self):
        return (list(Kind).index(self.kind), abs(self.m), -self.m)

    def __str__(self):
        return f"{self.kind.value} m={self.m}"

    @classmethod
    def parse(cls, label: str, m: int) -> "CaseKind":
        for k in Kind:
            if k.value == label:
                return cls(k, m)
        raise DomainError(f"unknown case label {label!r}")


def classify(n: int) -> List[CaseKind]:
    """Every conic-bundle case applying to n, with both signs of m."""
    if n == 0:
        raise DomainError("n must be nonzero")
    out = []

    def both(kind, r):
        if r:
            out.extend([CaseKind(kind, r), CaseKind(kind, -r)])

    both(Kind.SQUARE, is_square(n))
    if n % 2 == 0:
        both(Kind.TWO_SQUARE, is_square(n // 2))
        both(Kind.MINUS_TWO_SQUARE, is_square(-n // 2))
    if n % 4 == 0:
        both(Kind.MINUS_FOUR_FOURTH, fourth_root(-n // 4))
    both(Kind.FOURTH_POWER, fourth_root(n))
    return out


def _require(case: CaseKind, n: int):
    if case.n != n:
        raise DomainError(f"case {case} does not apply to n={n}")


def st_values(case: CaseKind, sol: Solution) -> Tuple[int, int]:
    """The raw fibration coordinates (s, t) of ``sol``, before normalising."""
    _require(case, sol.n)
    m = case.row_m
    x, y, w = sol.x, sol.y, sol.w
    row = case.row
    if row is Kind.SQUARE:
        return x * x - m, w - y * y
    if row is Kind.MINUS_FOUR_FOURTH:
        return x * x + 2 * m * x + 2 * m * m, w - y * y
    if row is Kind.TWO_SQUARE:
        return x * y - m, x * x - y * y - w
    return x * y - m, x * x + y * y - w


def st_values_chart2(case: CaseKind, sol: Solution) -> Tuple[int, int]:
    """Second chart of the same map, from the factorisation of x^4 + y^4 - w^2 - n."""
    _require(case, sol.n)
    m = case.row_m
    x, y, w = sol.x, sol.y, sol.w
    row = case.row
    if row is Kind.SQUARE:
        return w + y * y, x * x + m
    if row is Kind.MINUS_FOUR_FOURTH:
        return w + y * y, x * x - 2 * m * x + 2 * m * m
    if row is Kind.TWO_SQUARE:
        return -(x * x - y * y + w), 2 * (x * y + m)
    return x * x + y * y + w, 2 * (x * y + m)


@dataclass(frozen=True)
class Fiber:
    case: CaseKind
    s: int
    t: int

    def __post_init__(self):
        if (self.s, self.t) != primitive_pair(self.s, self.t):
            raise DomainError(f"fiber label ({self.s}, {self.t}) is not primitive")

    @property
    def sort_key(self):
        return self.case.sort_key + (self.s, self.t)

    def __str__(self):
        return f"({self.s} : {self.t})"


def pi1(case: CaseKind, sol: Solution) -> Fiber:
    s, t = st_values(case, sol)
    if s == 0 and t == 0:
        s, t = st_values_chart2(case, sol)
        if s == 0 and t == 0:
            raise RuntimeError(f"both charts vanish at {sol} for {case}")
    return Fiber(case, *primitive_pair(s, t))


def geiser(sol: Solution) -> Solution:
    return Solution(sol.n, sol.x, sol.y, -sol.w)


def sym_orbit(sol: Solution) -> set:
    out = set()
    for sx in (1, -1):
        for sy in (1, -1):
            for sw in (1, -1):
                a, b, w = sx * sol.x, sy * sol.y, sw * sol.w
                out.add(Solution(sol.n, a, b, w))
                out.add(Solution(sol.n, b, a, w))
    return out


def _equation_m(case: CaseKind) -> int:
    # For n = -2m^2 the map (xy - m z^2, x^2 + y^2 - w) cuts out the conic whose
    # constant term is -m(2s^2 - t^2): the listed row pairs that map with m
    # of the opposite sign.  Eliminating w from the map confirms this sign.
    if case.row is Kind.MINUS_TWO_SQUARE:
        return -case.row_m
    return case.row_m


def fiber_ternary(case: CaseKind, s: int, t: int) -> TernaryForm:
    """The conic-bundle equation at (s : t) as a ternary form in (x0, x1, x2)."""
    m = _equation_m(case)
    row = case.row
    if row is Kind.MINUS_FOUR_FOURTH:
        return TernaryForm.from_coeffs(
            s * s - t * t, -2 * s * t, 2 * m * m * (s * s - t * t),
            c02=-2 * m * (s * s + t * t))
    if row is Kind.SQUARE:
        return TernaryForm.from_coeffs(s * s - t * t, -2 * s * t, m * (s * s + t * t))
    if row is Kind.TWO_SQUARE:
        return TernaryForm.from_coeffs(
            2 * s * t, -2 * s * t, m * (2 * s * s + t * t), c01=2 * s * s - t * t)
    return TernaryForm.from_coeffs(
        2 * s * t, 2 * s * t, m * (2 * s * s - t * t), c01=-(2 * s * s + t * t))


def fiber_conic(case: CaseKind, fiber: Fiber) -> Tuple[AffineConic, TernaryForm]:
    T = fiber_ternary(case, fiber.s, fiber.t)
    return T.affine(), T


def factored_determinant(case: CaseKind, s: int, t: int) -> Fraction:
    """Closed-form factored determinant of the fibre's Gram matrix."""
    m = _equation_m(case)
    row = case.row
    if row is Kind.MINUS_FOUR_FOURTH:
        return Fraction(-2 * m * m * s * t * (s * s - 2 * s * t - t * t) * (s * s + 2 * s * t - t * t))
    if row is Kind.SQUARE:
        return Fraction(-2 * m * s * t * (s - t) * (s + t) * (s * s + t * t))
    if row is Kind.TWO_SQUARE:
        return Fraction(-m, 4) * (2 * s * s + t * t) * (4 * s ** 4 + 12 * s * s * t * t + t ** 4)
    return (Fraction(-m, 4) * (2 * s * s - t * t) * (2 * s * s - 4 * s * t + t * t)
            * (2 * s * s + 4 * s * t + t * t))


def fiber_determinant_check(case: CaseKind, fiber: Fiber) -> bool:
    return ternary_det(fiber_ternary(case, fiber.s, fiber.t)) == factored_determinant(case, fiber.s, fiber.t)


def boundary_of_fiber(case: CaseKind, fiber: Fiber) -> BinaryForm:
    return fiber_ternary(case, fiber.s, fiber.t).boundary()


def bundle_equation(case: CaseKind, s: int, t: int, x: int, y: int, z: int = 1):
    """Bidegree-(2, 2) equation of the bundle, evaluated at ((s, t), (x, y, z))."""
    return fiber_ternary(case, s, t)((x, y, z))


def recover_solution(case: CaseKind, fiber: Fiber, point: Tuple[int, int]) -> Optional[Solution]:
    """Lift an integral point of the fibre conic (chart z = 1) to the surface."""
    conic, _ = fiber_conic(case, fiber)
    if not conic.contains(point):
        raise PreconditionError(f"{point} is not on the conic of fiber {fiber}")
    x, y = point
    m = case.row_m
    row = case.row
    s, t = fiber.s, fiber.t
    if row is Kind.SQUARE:
        s_pt = x * x - m
    elif row is Kind.MINUS_FOUR_FOURTH:
        s_pt = x * x + 2 * m * x + 2 * m * m
    else:
        s_pt = x * y - m

    if s != 0:
        if (t * s_pt) % s:
            return None
        t_pt = t * s_pt // s
        if row in (Kind.SQUARE, Kind.MINUS_FOUR_FOURTH):
            w = y * y + t_pt
        elif row is Kind.TWO_SQUARE:
            w = x * x - y * y - t_pt
        else:
            w = x * x + y * y - t_pt
    else:
        # fibre (0 : 1): the second chart's first coordinate vanishes
        if row in (Kind.SQUARE, Kind.MINUS_FOUR_FOURTH):
            w = -y * y
        elif row is Kind.TWO_SQUARE:
            w = y * y - x * x
        else:
            w = -(x * x + y * y)
    if not verify_solution(case.n, x, y, w):
        return None
    return Solution(case.n, x, y, w)


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    case: CaseKind
    m_sign: int
    geiser_applied: bool
    swap_applied: bool
    fiber: Fiber
    boundary: BoundaryType
    smooth_fiber: bool
    s_raw: int
    t_raw: int

    @property
    def variant_used(self):
        return (self.m_sign, self.geiser_applied, self.swap_applied)


def _literal_condition(case: CaseKind, s: int, t: int) -> bool:
    if case.kind is Kind.SQUARE:
        return s * t * (s + t) * (s - t) > 0
    if case.kind is Kind.TWO_SQUARE:
        return s * t != 0
    if case.kind is Kind.MINUS_TWO_SQUARE:
        return 4 * s ** 4 - 12 * s * s * t * t + t ** 4 > 0 and s * t != 0
    raise DomainError(f"no literal condition for {case}")


def _geometry(case: CaseKind, sol: Solution):
    fiber = pi1(case, sol)
    form = boundary_of_fiber(case, fiber)
    btype = boundary_classify(form)
    smooth = ternary_det(fiber_ternary(case, fiber.s, fiber.t)) != 0
    return fiber, form, btype, smooth


def goodness(case: CaseKind, sol: Solution) -> GoodnessReport:
    """Decide whether ``sol`` certifies infinitely many points on its fibre.

    Square, 2m^2 and -2m^2 cases use the explicit inequality on (s, t).  The
    m^4 and -4m^4 cases carry no inequality; every variant (sign of m, Geiser
    image, x <-> y) is tried and the first fibre with real quadratic
    boundary wins.
    """
    _require(case, sol.n)
    if case.kind in (Kind.FOURTH_POWER, Kind.MINUS_FOUR_FOURTH):
        first = None
        for msign in (1, -1):
            c = CaseKind(case.kind, msign * case.m)
            for g in (False, True):
                for sw in (False, True):
                    p = geiser(sol) if g else sol
                    p = p.swap() if sw else p
                    fiber, form, btype, smooth = _geometry(c, p)
                    s_raw, t_raw = st_values(c, p)
                    ok = (btype is BoundaryType.REAL_QUADRATIC and smooth and form.disc != 0)
                    rep = GoodnessReport(ok, c, sign(c.m), g, sw, fiber, btype, smooth, s_raw, t_raw)
                    if ok:
                        return rep
                    if first is None:
                        first = rep
        return first

    s_raw, t_raw = st_values(case, sol)
    fiber, form, btype, smooth = _geometry(case, sol)
    good = _literal_condition(case, s_raw, t_raw)
    if good and not (btype is BoundaryType.REAL_QUADRATIC and smooth and form.disc != 0):
        raise RuntimeError(
            f"goodness cross-check failed for {sol} in case {case}: boundary {btype}, smooth={smooth}")
    return GoodnessReport(good, case, sign(case.m), False, False, fiber, btype, smooth, s_raw, t_raw)


def good_cases(sol: Solution) -> Dict[CaseKind, GoodnessReport]:
    return {c: goodness(c, sol) for c in classify(sol.n)}
