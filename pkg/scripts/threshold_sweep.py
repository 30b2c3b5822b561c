"""Compare the exhaustive oracle with the binomial threshold on staircases."""
import argparse
import time

from youngcover import constructor
from youngcover.diagram import staircase
from youngcover.oracle import SearchCaps, exists_local_cover


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-sum", type=int, default=5, help="largest i+j swept")
    args = ap.parse_args()
    print(f"{'i':>2} {'j':>2} {'cap':>4} {'z':>3} {'oracle':>10} {'formula':>8} {'nodes':>8} {'sec':>6}")
    mismatches = 0
    for i in range(1, args.max_sum):
        for j in range(1, args.max_sum + 1 - i):
            cap = constructor.capacity(i, j)
            caps = SearchCaps(max_z=cap + 1)
            for z in (cap, cap + 1):
                t = time.perf_counter()
                rep = exists_local_cover(staircase(z), i, j, caps)
                dt = time.perf_counter() - t
                expected = constructor.feasible(i, j, z)
                mismatches += rep.verdict.value != ("feasible" if expected else "infeasible")
                print(f"{i:>2} {j:>2} {cap:>4} {z:>3} {rep.verdict.value:>10} {str(expected):>8} {rep.nodes_explored:>8} {dt:>6.2f}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
