"""Evaluate N(q) for Gr(2,4) and compare with a brute-force count of
2-dimensional subspaces of F_q^4.

    python scripts/counting_crosscheck.py 2 3 5 7
"""
import argparse
import time

from bluescheme.models import GR24_COUNTING, count_subspaces_bruteforce, grassmannian_2_4


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("q", type=int, nargs="*", default=[2, 3, 5])
    args = ap.parse_args()

    print(f"N(q) = sum c_i (q-1)^i with c = {GR24_COUNTING.coefficients}")
    print(f"{'q':>3} {'N(q)':>8} {'oracle':>8} {'sec':>6}")
    for q in args.q:
        t0 = time.perf_counter()
        oracle = count_subspaces_bruteforce(2, 4, q)
        dt = time.perf_counter() - t0
        mark = "" if oracle == GR24_COUNTING(q) else "  MISMATCH"
        print(f"{q:>3} {GR24_COUNTING(q):>8} {oracle:>8} {dt:>6.2f}{mark}")

    n_points = len(grassmannian_2_4().points)
    print(f"N evaluated at q=1 gives {GR24_COUNTING(1)}; sum of coefficients {sum(GR24_COUNTING.coefficients)}; "
          f"F1 Proj has {n_points} points")


if __name__ == "__main__":
    main()
