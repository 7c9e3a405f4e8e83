"""Print, for each listed seed, every conic-bundle case and its goodness report."""

from nearmiss.surface import Solution, good_cases, verify_solution

ROWS = [(1, 5, 7, 55), (2, 15, 33, 1112), (-2, 47, 39, 2682), (-4, 2, 2, 6), (8, 3, 6, 37), (25, 5, 5, 35)]


def main():
    for n, x, y, w in ROWS:
        print(f"n={n} ({x}, {y}, {w}) verifies={verify_solution(n, x, y, w)}")
        for case, rep in good_cases(Solution(n, x, y, w)).items():
            variant = ""
            if rep.case != case or rep.geiser_applied or rep.swap_applied:
                variant = f" via m={rep.case.m} geiser={rep.geiser_applied} swap={rep.swap_applied}"
            print(f"  {case}: fibre {rep.fiber} boundary {rep.boundary} good={rep.good}{variant}")


if __name__ == "__main__":
    main()
