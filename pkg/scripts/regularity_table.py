"""Tabulate reg(J(T)^s) against s * deg(J(T)) for every tree up to a given size."""

import argparse

from covergadget.betti import regularity
from covergadget.harness import tree_pool
from covergadget.ideal import cover_ideal, max_gen_degree, power


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--smax", type=int, default=3)
    args = ap.parse_args()
    print(f"{'tree':<10}{'edges':<40}" + "".join(f"s={s:<6}" for s in range(1, args.smax + 1)))
    for name, T in tree_pool(args.nmax, 2):
        J = cover_ideal(T)
        d = max_gen_degree(J)
        cells = [f"{regularity(power(J, s))}/{s * d}" for s in range(1, args.smax + 1)]
        print(f"{name:<10}{' '.join(f'{a}-{b}' for a, b in T.edges):<40}" + "".join(f"{c:<8}" for c in cells))


if __name__ == "__main__":
    main()
