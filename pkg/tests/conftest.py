import pytest

from nearmiss.seeds import brute_search
from nearmiss.surface import Solution, classify, sym_orbit

# (n, x, y, w) rows listed with the original problem
SEEDS = [
    (1, 5, 7, 55),
    (2, 15, 33, 1112),
    (-2, 47, 39, 2682),
    (-4, 2, 2, 6),
    (8, 3, 6, 37),
    (25, 5, 5, 35),
]


@pytest.fixture(scope="session")
def listed_seeds():
    return [Solution(*row) for row in SEEDS]


@pytest.fixture(scope="session")
def solution_pool():
    """Every solution with |x|, |y| <= 60 for supported n in [-3000, 3000], all symmetry images."""
    pool = set()
    for n in range(-3000, 3001):
        if n and classify(n):
            for sol in brute_search(n, 60):
                pool |= sym_orbit(sol)
    return sorted(pool, key=lambda s: (s.n, s.x, s.y, s.w))
