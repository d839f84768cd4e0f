"""Command-line interface: compute, validate, and benchmark zero tables.

Commands:
  zeros     upper-half zeros by sweep or asymptotic expansion (csv/json)
  approx    asymptotic expansion only, with per-index diagnostics
  validate  compare both methods against the brute-force oracle (json)
  bench     sweep wall-clock timings over a fixed degree grid (csv)

Exit codes: 0 success, 1 computation failure, 2 partial result,
64 usage error.  Output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass
from typing import List, Optional

from .errors import (ApproximationFailures, InvalidDegree,
                     ParameterOutOfRange, RgbpError, SweepStalled)
from .expansion import approx_all
from .params import DEFAULT_DELTA1, DEFAULT_DELTA2, make_params
from .polynomials import poly_coeffs, oracle_zeros, relative_residual
from .sweep import sweep

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARTIAL = 2
EXIT_USAGE = 64

BENCH_DEGREES = (30, 200, 500, 1000, 2000)
BENCH_A = 2.3
BENCH_REPEATS = 5
VALIDATE_MAX_N = 200


@dataclass
class RunConfig:
    command: str
    n: int = 0
    a: float = 0.0
    method: str = "sweep"
    terms: int = 5
    eps: float = 1e-12
    format: str = "csv"
    output: Optional[str] = None
    delta1: float = DEFAULT_DELTA1
    delta2: float = DEFAULT_DELTA2
    gate: float = 1e-10


@dataclass
class ZeroRow:
    m: int
    z: complex
    residual: float
    method: str
    terms: int
    partial: bool = False


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rgbp-zeros",
        description="Zeros of reverse generalized Bessel polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_na=True):
        if need_na:
            sp.add_argument("--n", type=int, required=True,
                            help="polynomial degree")
            sp.add_argument("--a", type=float, required=True,
                            help="real parameter")
        sp.add_argument("--output", default=None,
                        help="output path (default: stdout)")
        sp.add_argument("--delta1", type=float, default=DEFAULT_DELTA1)
        sp.add_argument("--delta2", type=float, default=DEFAULT_DELTA2)

    sp = sub.add_parser("zeros", help="compute upper-half zeros")
    common(sp)
    sp.add_argument("--method", choices=("sweep", "asymptotic"),
                    default="sweep")
    sp.add_argument("--terms", type=int, default=5, choices=range(1, 6))
    sp.add_argument("--eps", type=float, default=1e-12)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("approx", help="asymptotic expansion only")
    common(sp)
    sp.add_argument("--terms", type=int, default=5, choices=range(1, 6))
    sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("validate", help="compare both methods to the oracle")
    common(sp)
    sp.add_argument("--terms", type=int, default=5, choices=range(1, 6))
    sp.add_argument("--eps", type=float, default=1e-12)
    sp.add_argument("--gate", type=float, default=1e-10,
                    help="maximum allowed relative error")

    sp = sub.add_parser("bench", help="sweep timing table")
    common(sp, need_na=False)
    return p


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("n", "a", "method", "terms", "eps", "format", "output",
                 "delta1", "delta2", "gate"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _rows_to_csv(rows: List[ZeroRow], partial: bool) -> str:
    lines = ["# conjugates_implied=true"]
    if partial:
        lines.append("# partial=true")
    lines.append("m,re,im,residual,method,terms")
    for r in rows:
        lines.append(f"{r.m},{r.z.real!r},{r.z.imag!r},{r.residual!r},"
                     f"{r.method},{r.terms}")
    return "\n".join(lines) + "\n"


def _rows_to_json(cfg: RunConfig, rows: List[ZeroRow], partial: bool) -> str:
    params = make_params(cfg.n, cfg.a, cfg.delta1, cfg.delta2)
    doc = {
        "meta": {"n": cfg.n, "a": cfg.a, "u": params.u, "alpha": params.alpha,
                 "method": rows[0].method if rows else cfg.method,
                 "terms": cfg.terms, "eps": cfg.eps},
        "conjugates_implied": True,
        "partial": partial,
        "zeros": [{"m": r.m, "re": r.z.real, "im": r.z.imag,
                   "residual": r.residual, "method": r.method,
                   "terms": r.terms} for r in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def _compute_rows(cfg: RunConfig, method: str):
    """(rows, partial_flag) for the requested method."""
    params = make_params(cfg.n, cfg.a, cfg.delta1, cfg.delta2)
    coeffs = poly_coeffs(cfg.n, cfg.a)
    partial = False
    if method == "sweep":
        try:
            zs = sweep(cfg.n, cfg.a, eps=cfg.eps)
        except SweepStalled as exc:
            zs = exc.partial
            partial = True
        terms = 3 if cfg.n < 30 else 5  # seeding policy, informational
        rows = [ZeroRow(m=i + 1, z=z,
                        residual=relative_residual(coeffs, z),
                        method="sweep", terms=terms, partial=partial)
                for i, z in enumerate(zs)]
    else:
        approxes = approx_all(params, terms=cfg.terms)
        rows = [ZeroRow(m=ap.m, z=ap.t,
                        residual=relative_residual(coeffs, ap.t),
                        method="asymptotic", terms=ap.terms_used)
                for ap in approxes]
    return rows, partial


def cmd_zeros(cfg: RunConfig) -> int:
    rows, partial = _compute_rows(cfg, cfg.method)
    if cfg.format == "csv":
        _emit(_rows_to_csv(rows, partial), cfg.output)
    else:
        _emit(_rows_to_json(cfg, rows, partial), cfg.output)
    return EXIT_PARTIAL if partial else EXIT_OK


def cmd_approx(cfg: RunConfig) -> int:
    rows, partial = _compute_rows(cfg, "asymptotic")
    if cfg.format == "csv":
        _emit(_rows_to_csv(rows, partial), cfg.output)
    else:
        _emit(_rows_to_json(cfg, rows, partial), cfg.output)
    return EXIT_OK


def _thread_cap() -> int:
    env = os.environ.get("RGBP_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


def cmd_validate(cfg: RunConfig) -> int:
    if cfg.n > VALIDATE_MAX_N:
        raise ParameterOutOfRange(
            f"validate is limited to n <= {VALIDATE_MAX_N} (oracle bound)")
    from concurrent.futures import ThreadPoolExecutor

    params = make_params(cfg.n, cfg.a, cfg.delta1, cfg.delta2)
    truth = [z for z in oracle_zeros(cfg.n, cfg.a) if z.imag >= -1e-12]
    truth = truth[:params.num_upper_zeros]

    def nearest_err(z: complex) -> float:
        r = min(truth, key=lambda r: abs(r - z))
        return abs(z - r) / abs(r)

    swept = sweep(cfg.n, cfg.a, eps=cfg.eps)
    approxes = approx_all(params, terms=cfg.terms)
    with ThreadPoolExecutor(max_workers=_thread_cap()) as pool:
        sweep_errs = list(pool.map(nearest_err, swept))
        approx_errs = list(pool.map(nearest_err, (ap.t for ap in approxes)))

    def summary(errs):
        return {"per_m": errs, "max": max(errs), "median":
                statistics.median(errs)}

    ok = max(sweep_errs) <= cfg.gate and max(approx_errs) <= cfg.gate
    report = {
        "meta": {"n": cfg.n, "a": cfg.a, "u": params.u, "alpha": params.alpha,
                 "method": "both", "terms": cfg.terms, "eps": cfg.eps},
        "gate": cfg.gate,
        "sweep_vs_oracle": summary(sweep_errs),
        "asymptotic_vs_oracle": summary(approx_errs),
        "pass": ok,
    }
    _emit(json.dumps(report, indent=2) + "\n", cfg.output)
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_bench(cfg: RunConfig) -> int:
    lines = ["n,a,zeros,median_seconds"]
    for n in BENCH_DEGREES:
        sweep(n, BENCH_A)  # warm caches before timing
        times = []
        count = 0
        for _ in range(BENCH_REPEATS):
            t0 = time.perf_counter()
            zs = sweep(n, BENCH_A)
            times.append(time.perf_counter() - t0)
            count = len(zs)
        lines.append(f"{n},{BENCH_A!r},{count},{statistics.median(times)!r}")
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; remap to the contract value
        return EXIT_USAGE if exc.code not in (0, None) else 0
    cfg = _config_from_args(args)
    handlers = {"zeros": cmd_zeros, "approx": cmd_approx,
                "validate": cmd_validate, "bench": cmd_bench}
    try:
        return handlers[cfg.command](cfg)
    except (InvalidDegree, ParameterOutOfRange) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ApproximationFailures as exc:
        for m, sub_exc in exc.failures:
            print(f"m={m}: {type(sub_exc).__name__}: {sub_exc}",
                  file=sys.stderr)
        return EXIT_FAILURE
    except RgbpError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
