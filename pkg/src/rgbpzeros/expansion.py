"""Asymptotic approximation of individual zeros.

For each index m the scaled zero has an expansion  u * sum_s tau_s / u^(2s).
The leading coefficient tau_0 solves a branch-sensitive transcendental
equation (Newton on the shifted unknown w = tau_0 + 1/2); the next four
coefficients follow from a closed cascade driven by the Airy-variable
derivatives and the phase-correction terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import List, Optional

from .airy import airy_zero
from .errors import ApproximationFailures, NewtonDivergence
from .jets import JetOps
from .lg_coeffs import LgTable, build_lg_table
from .mapping import map_point, zeta_for_airy_zero
from .params import ProblemParams
from .phase import phase_corrections

LOW_CONFIDENCE_N = 10  # the expansion is asymptotic; below this n it is a guess
NEWTON_TOL = 1e-14
NEWTON_MAX_ITERS = 50
_RETRY_SEEDS = (0.0 + 0.0j, 0.1j, 0.2j)


@dataclass
class ZeroApprox:
    m: int
    tau: List[complex]            # tau_0 .. tau_4
    t: complex                    # assembled zero approximation
    terms_used: int
    newton_residual: float
    newton_iters: int
    low_confidence: bool = False


def _tau0_residual(params: ProblemParams, tau: complex, xi_target: complex):
    """Residual of the implicit leading-order equation and its derivative."""
    al = params.alpha
    Z = -cmath.sqrt((tau + 0.5 * al) ** 2 + 1.0 + al)
    val = (Z
           + (1.0 + 0.5 * al) * cmath.log(
               tau / (4.0 * Z + 2.0 * al * (Z + tau + 2.0) + 4.0 + al * al))
           + 0.5 * al * (cmath.log(-2.0 * Z - 2.0 * tau - al) + math.pi * 1j)
           + 0.5 * cmath.log(1.0 + al)
           + (2.0 + 0.5 * al) * math.log(2.0)
           - 0.5 * (1.0 + al) * math.pi * 1j)
    return val - xi_target, Z / tau  # F, F' (= xi')


def solve_tau0(params: ProblemParams, m: int, *,
               tol: float = NEWTON_TOL,
               max_iters: int = NEWTON_MAX_ITERS):
    """Leading coefficient tau_0 for index m.

    Returns (tau0, residual, iters).  Newton runs on w with tau_0 = -1/2 + w,
    seeded at w = 0 (retrying from small imaginary seeds on divergence).
    """
    if not 1 <= m <= params.num_upper_zeros:
        raise ValueError(
            f"m={m} outside 1..{params.num_upper_zeros} for n={params.n}")
    am = airy_zero(m)
    xi_target = -2j * abs(am) ** 1.5 / (3.0 * params.u)
    last_exc: Optional[Exception] = None
    for seed in _RETRY_SEEDS:
        w = seed
        try:
            for it in range(1, max_iters + 1):
                tau = -0.5 + w
                f, fp = _tau0_residual(params, tau, xi_target)
                dw = f / fp
                w -= dw
                if abs(dw) <= tol * (1.0 + abs(w)):
                    tau = -0.5 + w
                    resid = abs(_tau0_residual(params, tau, xi_target)[0])
                    return tau, resid, it
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            last_exc = exc
            continue
    raise NewtonDivergence(
        f"tau_0 Newton failed for n={params.n}, a={params.a}, m={m}"
        + (f" ({last_exc})" if last_exc else ""))


def tau_cascade(params: ProblemParams, lg: LgTable, m: int, tau0: complex,
                terms: int = 5, *,
                newton_residual: float = 0.0,
                newton_iters: int = 0) -> ZeroApprox:
    """Coefficients tau_1..tau_4 and the assembled zero approximation."""
    if not 1 <= terms <= 5:
        raise ValueError("terms must be in 1..5")
    zeta0, xi0 = zeta_for_airy_zero(params, m)
    state = map_point(params, tau0, xi_value=xi0, zeta_value=zeta0)
    ups = phase_corrections(params, lg, state)
    zj = state.jets["zeta"]
    zd1 = JetOps.derivative(zj, 1)
    zd2 = JetOps.derivative(zj, 2)
    zd3 = JetOps.derivative(zj, 3)
    zd4 = JetOps.derivative(zj, 4)
    u1, du1, d2u1, d3u1 = ups.u1, ups.du1, ups.d2u1, ups.d3u1
    u2, du2, d2u2 = ups.u2, ups.du2, ups.d2u2
    u3, du3 = ups.u3, ups.du3
    u4 = ups.u4

    t1 = -u1 / zd1
    t2 = -(t1 * t1 * zd2 + 2 * t1 * du1 + 2 * u2) / (2 * zd1)
    t3 = -(t1 ** 3 * zd3 + 6 * t1 * t2 * zd2 + 3 * t1 * t1 * d2u1
           + 6 * t2 * du1 + 6 * t1 * du2 + 6 * u3) / (6 * zd1)
    t4 = -(t1 ** 4 * zd4 + 12 * t1 * t1 * t2 * zd3 + 24 * t1 * t3 * zd2
           + 12 * t2 * t2 * zd2 + 4 * t1 ** 3 * d3u1 + 24 * t1 * t2 * d2u1
           + 12 * t1 * t1 * d2u2 + 24 * t3 * du1 + 24 * t2 * du2
           + 24 * t1 * du3 + 24 * u4) / (24 * zd1)

    tau = [tau0, t1, t2, t3, t4]
    u = params.u
    t = u * sum(tau[s] / u ** (2 * s) for s in range(terms))
    if t.imag < 0.0:
        # upper-half convention; a below-axis value can only be the
        # approximation error of the single real zero (odd n, last m)
        t = complex(t.real, 0.0)
    return ZeroApprox(m=m, tau=tau, t=t, terms_used=terms,
                      newton_residual=newton_residual,
                      newton_iters=newton_iters,
                      low_confidence=params.n < LOW_CONFIDENCE_N)


def approx_zero(params: ProblemParams, lg: LgTable, m: int,
                terms: int = 5) -> ZeroApprox:
    tau0, resid, iters = solve_tau0(params, m)
    return tau_cascade(params, lg, m, tau0, terms,
                       newton_residual=resid, newton_iters=iters)


def approx_all(params: ProblemParams, terms: int = 5,
               lg: Optional[LgTable] = None) -> List[ZeroApprox]:
    """One approximation per m = 1..floor((n+1)/2).

    Raises ApproximationFailures (carrying the successful subset) if any
    index fails.
    """
    if lg is None:
        lg = build_lg_table(params)
    results: List[ZeroApprox] = []
    failures = []
    for m in range(1, params.num_upper_zeros + 1):
        try:
            results.append(approx_zero(params, lg, m, terms))
        except Exception as exc:  # aggregated with the offending index
            failures.append((m, exc))
    if failures:
        raise ApproximationFailures(
            f"{len(failures)} of {params.num_upper_zeros} indices failed",
            failures, results)
    return results
