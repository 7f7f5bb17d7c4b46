#!/usr/bin/env python3
"""Tabulate chi(S^[n], Lambda^k L^[n]) and chi(S^[n], Sym^k L^[n]) for a toric surface."""

import argparse

from vertexlab.taut import nonequivariant_series, p1p1, p2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--surface", choices=["P2", "P1xP1"], default="P2")
    ap.add_argument("--degree", default="1", help="d for P2, a,b for P1xP1")
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--k", type=int, default=3)
    args = ap.parse_args()

    parts = [int(x) for x in args.degree.split(",")]
    S = p2(parts[0]) if args.surface == "P2" else p1p1(tuple(parts))
    for functor, label in (("lambda", "(-1)^k chi(Lambda^k)"), ("sym", "chi(Sym^k)")):
        s = nonequivariant_series(S, functor, (args.n, args.k))
        u = s.grading.unit
        print(f"{S.label}: {label}, rows n = 0..{args.n}, columns k = 0..{args.k}")
        for n in range(args.n + 1):
            row = [s.coeffs.get((n * u, k * u), 0) for k in range(args.k + 1)]
            print("  " + " ".join(f"{str(v):>8}" for v in row))


if __name__ == "__main__":
    main()
