"""Exact local dimension against the cover-number bounds for small posets."""
import argparse
import random

from youngcover.posets import ldim_bounds, ldim_brute, make_poset, standard_example


def random_poset(rng, n, density):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < density]
    return make_poset(n, pairs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=30)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    named = [(f"S_{m}", standard_example(m)) for m in (2, 3)]
    named += [(f"rand{s}", random_poset(rng, args.n, 0.4)) for s in range(args.samples)]
    outside = 0
    for name, P in named:
        b = ldim_bounds(P)
        value = ldim_brute(P)
        ok = b.contains(value)
        outside += not ok
        print(f"{name:>8} n={P.n} h={P.height()} ldim={value} bounds=[{b.lower}, {b.upper}] {'ok' if ok else 'OUTSIDE'}")
    print(f"outside bounds: {outside}")


if __name__ == "__main__":
    main()
