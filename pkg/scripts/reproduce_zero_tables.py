#!/usr/bin/env python3
"""Print the 5-term asymptotic zeros for the reference (n, m) pairs.

Covers both benchmark parameter values (a = 1.01 and a = 20.2) and, when
--check is given, compares each zero against the brute-force oracle.
"""

import argparse
import sys

from rgbpzeros import approx_all, make_params, oracle_zeros

PAIRS = [(15, 1), (15, 3), (30, 1), (30, 3), (30, 10), (30, 15),
         (50, 1), (50, 3), (50, 10), (50, 15), (50, 25)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=float, nargs="*", default=[1.01, 20.2])
    ap.add_argument("--check", action="store_true",
                    help="also report relative error vs the oracle")
    args = ap.parse_args(argv)

    worst = 0.0
    for a in args.a:
        print(f"# a = {a}")
        header = "n,m,re,im" + (",rel_err_vs_oracle" if args.check else "")
        print(header)
        for n in sorted({n for n, _ in PAIRS}):
            res = approx_all(make_params(n, a), terms=5)
            truth = None
            if args.check:
                truth = [z for z in oracle_zeros(n, a) if z.imag >= -1e-12]
            for nn, m in PAIRS:
                if nn != n:
                    continue
                t = res[m - 1].t
                line = f"{n},{m},{t.real!r},{t.imag!r}"
                if truth is not None:
                    err = min(abs(t - r) / abs(r) for r in truth)
                    worst = max(worst, err)
                    line += f",{err:.3e}"
                print(line)
        print()
    if args.check:
        print(f"# worst relative error: {worst:.3e}")
        return 0 if worst <= 1e-10 else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
