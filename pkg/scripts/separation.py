"""Staircase difference graphs: one difference graph covers each, while the
local biclique cover number keeps growing."""
import argparse

from youngcover.constructor import capacity
from youngcover.diffgraph import cn_cb_difference, cn_d_difference, cn_local_bruteforce, from_young
from youngcover.diagram import staircase


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--brute-up-to", type=int, default=5, help="cross-check with brute force for z up to this")
    args = ap.parse_args()
    print(f"{'z':>4} {'cn_D':>5} {'cn_CB':>6} {'brute':>6}")
    for k in range(1, args.max_k + 1):
        z = capacity(k, k)
        H = from_young(staircase(z))
        brute = cn_local_bruteforce(H, "CB").value if z <= args.brute_up_to else None
        print(f"{z:>4} {cn_d_difference(H).value:>5} {cn_cb_difference(H).value:>6} {'-' if brute is None else brute:>6}")


if __name__ == "__main__":
    main()
