"""Taylor-transport sweep computing every upper-half zero in order.

Between consecutive zeros the normalized solution w (w = 0, w' = 1 at the
previous zero) is carried by a truncated Taylor table of its derivatives,
generated from the differential-equation recurrence; each new zero is the
fixed point of  T(z) = z - arctan(sqrt(Omega) w / w') / sqrt(Omega),
started one local half-period  H = pi / sqrt(Omega)  away.  The first zero
comes from the asymptotic expansion (with a high-precision Newton polish
at small degrees, where the expansion alone is not at full accuracy).

Cost is O(1) work per zero: the Taylor table has a fixed number of terms
and the carrier re-expands only when the truncation estimate demands it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import (InvalidDegree, IterationDivergence, SweepStalled,
                     StepTooLarge)
from .expansion import approx_zero
from .lg_coeffs import build_lg_table
from .params import make_params
from .polynomials import _mp_coeffs, _mp_polish

POLISH_BELOW_N = 30   # expansion seed is polished below this degree
POLISH_DPS = 30
SEED_TERMS_SMALL = 3  # expansion terms for the polished small-n seed
SEED_TERMS_LARGE = 5
SEED_DRIFT_LIMIT = 0.5  # polished first zero may not move further than this


@dataclass
class SweepConfig:
    eps: float = 1e-12
    taylor_terms: int = 16       # table length K (derivatives 0..K)
    max_iters: int = 30          # fixed-point iterations per zero
    step_eps: float = 1e-13      # Taylor truncation tolerance


def omega(n: int, a: float, z: complex) -> complex:
    """Local frequency-squared of the normalized equation w'' + Omega w = 0
    plus lower-order terms; Omega = -1 + (2-a)/z - (n+a/2)(n+a/2-1)/z^2."""
    z = complex(z)
    return -1.0 + (2.0 - a) / z - (n + a / 2.0) * (n + a / 2.0 - 1.0) / (z * z)


def taylor_table(n: int, a: float, z0: complex, w0: complex, dw0: complex,
                 terms: int = 16) -> List[complex]:
    """Derivatives w, w', ..., w^(terms) at z0 from the equation recurrence."""
    z0 = complex(z0)
    C = (n + a / 2.0) * (n + a / 2.0 - 1.0)
    z2 = z0 * z0
    Q = -z2 + (2.0 - a) * z0 - C
    d = [0j] * (terms + 1)
    d[0] = complex(w0)
    d[1] = complex(dw0)
    d[2] = -(Q / z2) * d[0]
    if terms >= 3:
        d[3] = -(Q / z2) * d[1] + ((2.0 - a) / z2 - 2.0 * C / (z2 * z0)) * d[0]
    for k in range(2, terms - 1):
        d[k + 2] = -(2.0 * k * z0 * d[k + 1] + (Q + k * (k - 1)) * d[k]
                     - k * (2.0 * z0 + a - 2.0) * d[k - 1]
                     - k * (k - 1) * d[k - 2]) / z2
    return d


def taylor_step(d: List[complex], h: complex, eps: float = 1e-13):
    """(w, w') a displacement h from the table's base point.

    The last retained term bounds the truncation; the step is rejected
    (StepTooLarge) when that estimate exceeds eps relative to the result.
    """
    K = len(d) - 1
    N = K - 1
    w = 0j
    dw = 0j
    term = 1.0 + 0j
    for k in range(N + 1):
        w += d[k] * term
        dw += d[k + 1] * term
        term = term * h / (k + 1)
    est = max(abs(d[N]), abs(d[K])) * abs(h) ** N / math.factorial(N)
    if est > eps * max(abs(w), abs(dw), 1.0):
        raise StepTooLarge(f"truncation estimate {est:.3e} at |h|={abs(h):.3e}")
    return w, dw


class Carrier:
    """Movable Taylor table transporting (w, w') along the sweep path."""

    def __init__(self, n: int, a: float, z0: complex, w0: complex,
                 dw0: complex, terms: int = 16, step_eps: float = 1e-13):
        self.n, self.a = n, a
        self.terms = terms
        self.step_eps = step_eps
        self.z0 = complex(z0)
        self.d = taylor_table(n, a, z0, w0, dw0, terms)

    def eval_at(self, z: complex):
        """(w, w') at z, re-expanding at intermediate points as needed."""
        while True:
            h = z - self.z0
            try:
                return taylor_step(self.d, h, self.step_eps)
            except StepTooLarge:
                frac = 0.5
                while True:
                    try:
                        w, dw = taylor_step(self.d, h * frac, self.step_eps)
                        break
                    except StepTooLarge:
                        frac *= 0.5
                        if frac < 1e-12:
                            raise
                self.z0 = self.z0 + h * frac
                self.d = taylor_table(self.n, self.a, self.z0, w, dw,
                                      self.terms)


def iterate_T(carrier: Carrier, z0: complex, *, eps: float = 1e-12,
              max_iters: int = 30) -> complex:
    """Fixed point of T(z) = z - arctan(sqrt(Omega) w / w') / sqrt(Omega)."""
    n, a = carrier.n, carrier.a
    z = complex(z0)
    for _ in range(max_iters):
        w, dw = carrier.eval_at(z)
        sq = cmath.sqrt(omega(n, a, z))
        upd = -cmath.atan(sq * w / dw) / sq
        if abs(upd) > 0.5 * math.pi / abs(sq):
            raise IterationDivergence(
                f"update {abs(upd):.3e} exceeds half the local period at z={z}")
        z = z + upd
        if abs(upd) <= eps * (1.0 + abs(z)):
            return z
    raise IterationDivergence(f"no fixed point within {max_iters} iterations "
                              f"near z={z0}")


def _first_zero(n: int, a: float) -> complex:
    params = make_params(n, a)
    lg = build_lg_table(params)
    if n >= POLISH_BELOW_N:
        return approx_zero(params, lg, 1, terms=SEED_TERMS_LARGE).t
    seed = approx_zero(params, lg, 1, terms=SEED_TERMS_SMALL).t
    import mpmath as mp

    with mp.workdps(POLISH_DPS):
        coefs = _mp_coeffs(n, a, mp)
        tol = mp.mpf(10) ** (-POLISH_DPS + 6)
        z = complex(_mp_polish(mp, coefs, seed, tol))
    if abs(z - seed) > SEED_DRIFT_LIMIT * (1.0 + abs(seed)):
        raise SweepStalled(
            f"first-zero polish drifted from {seed} to {z}", [])
    return z


def sweep(n: int, a: float, eps: float = 1e-12,
          config: Optional[SweepConfig] = None) -> List[complex]:
    """All floor((n+1)/2) upper-half zeros, by decreasing imaginary part.

    The lower-half zeros are the conjugates; for odd n the last entry is
    the single real zero (its imaginary part snapped to exactly zero).
    """
    make_params(n, a)  # validate up front
    cfg = config or SweepConfig(eps=eps)
    if config is None:
        cfg.eps = eps
    M = (n + 1) // 2
    zeros = [_first_zero(n, a)]
    for _ in range(1, M):
        zp = zeros[-1]
        sq = cmath.sqrt(omega(n, a, zp))
        step = math.pi / sq
        zt = zp + step
        if zt.imag > zp.imag:
            step = -step
            zt = zp + step
        carrier = Carrier(n, a, zp, 0.0, 1.0, cfg.taylor_terms, cfg.step_eps)
        z = None
        for attempt_step in (step, -step, 0.5 * step):
            try:
                cand = iterate_T(carrier, zp + attempt_step, eps=cfg.eps,
                                 max_iters=cfg.max_iters)
            except IterationDivergence:
                continue
            if cand.imag < zp.imag - 1e-14 * (1.0 + abs(zp.imag)):
                z = cand
                break
        if z is None:
            raise SweepStalled(
                f"sweep stalled after {len(zeros)} of {M} zeros "
                f"(n={n}, a={a})", zeros)
        zeros.append(z)
    if n % 2 == 1 and zeros:
        last = zeros[-1]
        if abs(last.imag) <= 64.0 * 2.220446049250313e-16 * (1.0 + abs(last.real)):
            zeros[-1] = complex(last.real, 0.0)
    return zeros
