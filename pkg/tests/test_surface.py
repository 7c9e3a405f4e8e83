from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nearmiss.conic import BoundaryType, integral_orbit, ternary_det
from nearmiss.errors import DomainError, PreconditionError
from nearmiss.exact_arith import primitive_pair
from nearmiss.pell import UnitTooLarge
from nearmiss.seeds import brute_search
from nearmiss.surface import (
    CaseKind,
    Fiber,
    Kind,
    Solution,
    boundary_of_fiber,
    bundle_equation,
    classify,
    fiber_conic,
    fiber_determinant_check,
    fiber_ternary,
    geiser,
    good_cases,
    goodness,
    pi1,
    recover_solution,
    st_values,
    st_values_chart2,
    sym_orbit,
    factored_determinant,
    verify_solution,
)


def labels(n):
    return [str(c) for c in classify(n)]


def test_classify_examples():
    assert labels(25) == ["square m=5", "square m=-5"]
    assert labels(1) == ["square m=1", "square m=-1", "m^4 m=1", "m^4 m=-1"]
    assert labels(8) == ["2m^2 m=2", "2m^2 m=-2"]
    assert labels(-2) == ["-2m^2 m=1", "-2m^2 m=-1"]
    assert labels(-4) == ["-4m^4 m=1", "-4m^4 m=-1"]
    assert classify(3) == [] and classify(-9) == []
    with pytest.raises(DomainError):
        classify(0)


def test_case_kind_rows():
    c = CaseKind(Kind.FOURTH_POWER, -2)
    assert c.n == 16 and c.row is Kind.SQUARE and c.row_m == -4
    assert CaseKind.parse("-2m^2", 3).n == -18
    with pytest.raises(DomainError):
        CaseKind.parse("cube", 1)


def test_solution_validation():
    assert verify_solution(25, 5, 5, 35)
    assert not verify_solution(25, 5, 5, 34)
    with pytest.raises(DomainError):
        Solution(25, 5, 5, 34)
    assert Solution(25, -5, 5, -35).key == (5, 5, 35)


def test_listed_seeds_good(listed_seeds):
    for sol in listed_seeds:
        reports = good_cases(sol)
        assert reports and all(r.good for r in reports.values()), sol


def test_pi1_examples():
    case = CaseKind(Kind.SQUARE, 5)
    assert pi1(case, Solution(25, 5, 5, 35)) == Fiber(case, 2, 1)
    case = CaseKind(Kind.TWO_SQUARE, 2)
    assert st_values(case, Solution(8, 3, 6, 37)) == (16, -64)


def test_determinant_example():
    case = CaseKind(Kind.SQUARE, 5)
    T = fiber_ternary(case, 2, 1)
    assert ternary_det(T) == -300 == factored_determinant(case, 2, 1)


def test_recover_examples():
    case = CaseKind(Kind.SQUARE, 5)
    fib = Fiber(case, 2, 1)
    assert recover_solution(case, fib, (75, 65)) == Solution(25, 75, 65, 7035)
    assert recover_solution(case, fib, (1045, 905)) == Solution(25, 1045, 905, 1365035)
    with pytest.raises(PreconditionError):
        recover_solution(case, fib, (1, 1))


def test_trivial_fourth_power_not_good():
    # x^4 = 1 with y = w = 0: no variant has a real quadratic boundary
    rep = goodness(CaseKind(Kind.FOURTH_POWER, 1), Solution(1, 1, 0, 0))
    assert not rep.good


def test_sym_orbit():
    assert len(sym_orbit(Solution(25, 5, 5, 35))) == 8
    assert len(sym_orbit(Solution(2, 15, 33, 1112))) == 16
    assert geiser(geiser(Solution(1, 5, 7, 55))) == Solution(1, 5, 7, 55)


cases = st.builds(CaseKind, st.sampled_from(list(Kind)), st.integers(-50, 50).filter(bool))
st_pairs = st.tuples(st.integers(-50, 50), st.integers(-50, 50)).filter(lambda p: p != (0, 0))


@settings(max_examples=1000, deadline=None)
@given(cases, st_pairs)
def test_factored_determinant(case, p):
    fib = Fiber(case, *primitive_pair(*p))
    assert fiber_determinant_check(case, fib)


def test_chart_consistency(solution_pool):
    both = 0
    for sol in solution_pool:
        for case in classify(sol.n):
            a, b = st_values(case, sol), st_values_chart2(case, sol)
            if a != (0, 0) and b != (0, 0):
                assert primitive_pair(*a) == primitive_pair(*b), (sol, case)
                both += 1
    assert both >= 10_000


def test_round_trip_and_bundle_equation(solution_pool):
    checked = 0
    for sol in solution_pool:
        for case in classify(sol.n):
            fib = pi1(case, sol)
            assert bundle_equation(case, fib.s, fib.t, sol.x, sol.y) == 0
            if ternary_det(fiber_ternary(case, fib.s, fib.t)) == 0:
                continue
            assert recover_solution(case, fib, (sol.x, sol.y)) == sol
            checked += 1
    assert checked >= 5000


def test_goodness_matches_geometry(solution_pool):
    for sol in solution_pool:
        for case in classify(sol.n):
            if case.kind not in (Kind.SQUARE, Kind.TWO_SQUARE, Kind.MINUS_TWO_SQUARE):
                continue
            rep = goodness(case, sol)
            if rep.s_raw * rep.t_raw == 0:
                assert not rep.good
                continue
            disc = boundary_of_fiber(case, rep.fiber).disc
            assert rep.good == (disc > 0), (sol, case)
            if case.kind is not Kind.SQUARE and rep.smooth_fiber:
                assert rep.boundary is not BoundaryType.TWO_RATIONAL


def test_smooth_fibres_for_two_square_cases():
    for m in range(1, 5):
        for n in (2 * m * m, -2 * m * m):
            for sol in brute_search(n, 200):
                for case in classify(n):
                    fib = pi1(case, sol)
                    assert ternary_det(fiber_ternary(case, fib.s, fib.t)) != 0, (sol, case)


def test_orbit_points_recover_to_solutions(listed_seeds):
    walked = 0
    for sol in listed_seeds:
        for case, rep in good_cases(sol).items():
            p = geiser(sol) if rep.geiser_applied else sol
            p = p.swap() if rep.swap_applied else p
            K, _ = fiber_conic(rep.case, rep.fiber)
            try:
                pts = integral_orbit(K, (p.x, p.y), 2, max_bits=4096)
            except UnitTooLarge:
                continue
            walked += 1
            for q in pts:
                r = recover_solution(rep.case, rep.fiber, q)
                if r is not None:
                    assert verify_solution(r.n, r.x, r.y, r.w)
                    assert pi1(rep.case, r) == rep.fiber
    assert walked >= 6
