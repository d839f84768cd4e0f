#!/usr/bin/env python3
"""Relative error of the truncated expansion as the parameter a grows.

For a fixed degree and zero index, prints the error of the k-term
approximation against the brute-force oracle over a range of a values.
The 5-term column should shrink as a increases.
"""

import argparse
import sys

from rgbpzeros import approx_zero, build_lg_table, make_params, oracle_zeros


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--a-min", type=float, default=2.0)
    ap.add_argument("--a-max", type=float, default=40.0)
    ap.add_argument("--steps", type=int, default=20)
    args = ap.parse_args(argv)

    print("a," + ",".join(f"rel_err_terms_{t}" for t in range(1, 6)))
    for i in range(args.steps):
        a = args.a_min + (args.a_max - args.a_min) * i / (args.steps - 1)
        p = make_params(args.n, a)
        lg = build_lg_table(p)
        truth = [z for z in oracle_zeros(args.n, a) if z.imag >= -1e-12]
        errs = []
        for terms in range(1, 6):
            t = approx_zero(p, lg, args.m, terms=terms).t
            errs.append(min(abs(t - r) / abs(r) for r in truth))
        print(f"{a:.4f}," + ",".join(f"{e:.3e}" for e in errs))
    return 0


if __name__ == "__main__":
    sys.exit(main())
