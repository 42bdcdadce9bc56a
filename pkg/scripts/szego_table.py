"""Toeplitz+Hankel determinants approaching the strong limit, for all four families."""

import argparse

from spodet.toeplitz_hankel import Symbol, szego_convergence, szego_rhs


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--plus", nargs="+", type=float, default=[0.4])
    p.add_argument("--minus", nargs="+", type=float, default=[0.3])
    p.add_argument("--max-size", type=int, default=12)
    args = p.parse_args()
    s = Symbol(args.plus, args.minus)
    sizes = range(1, args.max_size + 1)
    for kind, families in (("sp", (1, 2)), ("o", (3, 4))):
        print(f"{kind}: limit {szego_rhs(kind, s).real:.15f}")
        cols = [szego_convergence(kind, s, sizes, family=f) for f in families]
        print("  size " + "".join(f"   dev family {f:<6}" for f in families))
        for i, n in enumerate(sizes):
            print(f"  {n:4d} " + "".join(f"   {col[i][2]:<15.3e}" for col in cols))


if __name__ == "__main__":
    main()
