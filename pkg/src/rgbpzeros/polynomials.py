"""Direct polynomial evaluation and a brute-force zero oracle.

The polynomials are monic of degree n with coefficient
``binom(n, k) (n + a - 1)_k / 2^k`` on ``z^(n-k)``.  Coefficients grow like
n! so everything numeric here is carried as (mantissa, base-2 exponent)
pairs; ``math.frexp``/``math.ldexp`` keep the mantissas in a safe range up
to degrees of a few thousand.

The oracle deliberately avoids the asymptotic machinery: simultaneous
Aberth iteration in scaled double precision to locate all n roots at once,
then an independent high-precision Newton polish of each root.  Plain
monomial-basis companion solves (e.g. numpy.roots) lose 8-9 digits on
these coefficients and are not accurate enough to serve as a reference.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import InvalidDegree, OracleNoConvergence, ZeroArgument

ORACLE_TOL = 1e-13           # Aberth convergence (relative step)
ORACLE_MAX_ITERS = 100       # double-precision stage (limited by noise floor)
ORACLE_MP_MAX_ITERS = 80     # extended-precision stage
ORACLE_RESIDUAL_TOL = 1e-12  # relative residual contract per zero


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class PolyCoeffs:
    """Scaled coefficients, highest degree first (monic leading term)."""

    n: int
    a: float
    mant: Tuple[float, ...]   # coefficient of z^(n-k) is mant[k] * 2^exp2[k]
    exp2: Tuple[int, ...]

    def coefficient(self, k: int) -> float:
        """Plain float value of the z^(n-k) coefficient (may overflow)."""
        return math.ldexp(self.mant[k], self.exp2[k])


def poly_coeffs(n: int, a: float) -> PolyCoeffs:
    """All coefficients via the stable product recurrence
    c_{k+1} = c_k * (n-k)/(k+1) * (n+a-1+k)/2."""
    _check_degree(n)
    a = float(a)
    mant = [1.0]
    exp2 = [0]
    c, e = 1.0, 0
    for k in range(n):
        c *= (n - k) / (k + 1) * (n + a - 1 + k) / 2.0
        m, sh = math.frexp(c)
        c = m
        e += sh
        mant.append(c)
        exp2.append(e)
    return PolyCoeffs(n=n, a=a, mant=tuple(mant), exp2=tuple(exp2))


def exact_coeffs(n: int, a) -> List[Fraction]:
    """Exact rational coefficients (highest degree first) for rational a."""
    _check_degree(n)
    am = Fraction(a)
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(n):
        c = c * (n - k) / (k + 1) * (n + am - 1 + k) / 2
        out.append(c)
    return out


def theta(n: int, a: float, z: complex,
          coeffs: PolyCoeffs = None) -> Tuple[complex, int]:
    """Scaled value: returns (m, e) with theta_n(z; a) = m * 2^e."""
    v, _, e = theta_with_derivative(n, a, z, coeffs)
    return v, e


def theta_with_derivative(n: int, a: float, z: complex,
                          coeffs: PolyCoeffs = None):
    """Scaled Horner for the value and derivative on one shared exponent.

    Returns (p, q, e) with theta = p * 2^e and theta' = q * 2^e.
    """
    if coeffs is None:
        coeffs = poly_coeffs(n, a)
    z = complex(z)
    mant, exp2 = coeffs.mant, coeffs.exp2
    p = complex(mant[0])
    q = 0j
    e = exp2[0]
    for k in range(1, n + 1):
        q = q * z + p
        p = p * z + math.ldexp(mant[k], exp2[k] - e)
        m = abs(p) + abs(q)
        if m > 1e100 or (m != 0.0 and m < 1e-100):
            _, sh = math.frexp(m)
            p = math.ldexp(1.0, -sh) * p
            q = math.ldexp(1.0, -sh) * q
            e += sh
    return p, q, e


def theta_laguerre(n: int, a: float, z: complex) -> Tuple[complex, int]:
    """Independent scaled evaluation through the Laguerre three-term
    recurrence with parameter 1 - 2n - a at argument 2z, times
    (-1/2)^n n!.  Cross-check route only."""
    _check_degree(n)
    al = 1.0 - 2.0 * n - a
    x = 2.0 * complex(z)
    # L_0 = 1, L_1 = 1 + alpha - x; then
    # (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}
    lm, lc = 1.0 + 0j, 1.0 + al - x
    e = 0
    for k in range(1, n):
        ln = ((2 * k + 1 + al - x) * lc - (k + al) * lm) / (k + 1)
        lm, lc = lc, ln
        m = abs(lc) + abs(lm)
        if m > 1e100 or (m != 0.0 and m < 1e-100):
            _, sh = math.frexp(m)
            lc = math.ldexp(1.0, -sh) * lc
            lm = math.ldexp(1.0, -sh) * lm
            e += sh
    val = lc if n >= 1 else lm
    # multiply by (-1/2)^n n! in scaled form
    fac_m, fac_e = 1.0, -n
    for j in range(2, n + 1):
        fac_m *= j
        m, sh = math.frexp(fac_m)
        fac_m = m
        fac_e += sh
    if n % 2:
        fac_m = -fac_m
    return val * fac_m, e + fac_e


def w0_derivable(n: int, a: float, z: complex,
                 coeffs: PolyCoeffs = None) -> Tuple[complex, complex]:
    """Solution of the second-order equation satisfied by
    z^(1 - n - a/2) exp(-z) theta_n(z; a), and its derivative.

    Normalized exactly by that formula (no extra constant), so moderate
    degrees stay within double range.  Raises ZeroArgument at z = 0.
    """
    z = complex(z)
    if z == 0:
        raise ZeroArgument("w0 has a branch point at the origin")
    p, q, e = theta_with_derivative(n, a, z, coeffs)
    pref = cmath.exp((1.0 - n - 0.5 * a) * cmath.log(z) - z + e * math.log(2.0))
    w = pref * p
    dw = pref * (q + p * ((1.0 - n - 0.5 * a) / z - 1.0))
    return w, dw


def relative_residual(coeffs: PolyCoeffs, z: complex) -> float:
    """|p(z)| / sum_k |c_k| |z|^(n-k), both on the shared scaling."""
    z = complex(z)
    n = coeffs.n
    p = complex(coeffs.mant[0])
    s = abs(coeffs.mant[0])
    e = coeffs.exp2[0]
    az = abs(z)
    for k in range(1, n + 1):
        c = math.ldexp(coeffs.mant[k], coeffs.exp2[k] - e)
        p = p * z + c
        s = s * az + abs(c)
        m = abs(p) + s
        if m > 1e100 or (m != 0.0 and m < 1e-100):
            _, sh = math.frexp(m)
            p = math.ldexp(1.0, -sh) * p
            s = math.ldexp(s, -sh)
            e += sh
    return abs(p) / s if s else abs(p)


def _mp_coeffs(n: int, a: float, mp):
    am = mp.mpf(a)
    out = [mp.mpf(1)]
    c = mp.mpf(1)
    for k in range(n):
        c = c * (n - k) / (k + 1) * (n + am - 1 + k) / 2
        out.append(c)
    return out


def _mp_polish(mp, coefs, z0, tol):
    z = mp.mpc(z0)
    for _ in range(12):
        p = coefs[0]
        q = mp.mpf(0)
        for c in coefs[1:]:
            q = q * z + p
            p = p * z + c
        if q == 0:
            break
        dz = p / q
        z = z - dz
        if abs(dz) <= tol * (1 + abs(z)):
            break
    return z


def _aberth_double(n: int, a: float, coeffs: PolyCoeffs,
                   roots: List[complex]) -> None:
    """In-place double-precision Aberth stage.

    Monomial-basis evaluation noise limits the achievable accuracy here
    (for n around 50 the positions can still be off by O(10)); the job of
    this stage is only to spread the estimates into distinct basins.
    """
    for _ in range(ORACLE_MAX_ITERS):
        worst = 0.0
        for i in range(n):
            zi = roots[i]
            p, q, _ = theta_with_derivative(n, a, zi, coeffs)
            if p == 0:
                continue
            if q == 0:
                roots[i] = zi + 1e-8 * (1 + abs(zi))
                worst = 1.0
                continue
            newton = p / q
            s = 0j
            for j in range(n):
                if j != i:
                    d = zi - roots[j]
                    if d == 0:
                        d = 1e-14 * (1 + abs(zi))
                    s += 1.0 / d
            denom = 1.0 - newton * s
            step = newton / denom if denom != 0 else newton
            roots[i] = zi - step
            rel = abs(step) / (1.0 + abs(zi))
            if rel > worst:
                worst = rel
        if worst <= ORACLE_TOL:
            break


def oracle_zeros(n: int, a: float) -> List[complex]:
    """All n zeros, sorted by decreasing imaginary part (ties by real part).

    Deterministic Aberth iteration from a circle of seeds around the
    centroid -(n + a - 1)/2: a fast double-precision stage to separate the
    estimates, then the same simultaneous iteration with extended-precision
    evaluation (the monomial basis loses roughly n/3 digits near the zero
    cluster), and a per-root residual check.
    """
    coeffs = poly_coeffs(n, a)
    center = -(n + a - 1.0) / 2.0
    radius = max(abs(center), 1.0)
    roots = [center + radius * cmath.exp(2j * math.pi * (k + 0.25) / n
                                         + 0.3j / n)
             for k in range(n)]
    _aberth_double(n, a, coeffs, roots)

    import mpmath as mp

    dps = 30 + n // 2
    bad = []
    with mp.workdps(dps):
        coefs = _mp_coeffs(n, a, mp)
        est = [mp.mpc(r) for r in roots]
        tol = mp.mpf(10) ** (-(dps - 10))
        for _ in range(ORACLE_MP_MAX_ITERS):
            worst = mp.mpf(0)
            for i in range(n):
                zi = est[i]
                p = coefs[0]
                q = mp.mpf(0)
                for c in coefs[1:]:
                    q = q * zi + p
                    p = p * zi + c
                if p == 0:
                    continue
                if q == 0:
                    est[i] = zi + mp.mpf("1e-8") * (1 + abs(zi))
                    worst = mp.mpf(1)
                    continue
                newton = p / q
                # the repulsion sum is well-conditioned; double suffices
                zid = complex(zi)
                s = 0j
                for j in range(n):
                    if j != i:
                        d = zid - complex(est[j])
                        if d == 0:
                            d = 1e-14 * (1 + abs(zid))
                        s += 1.0 / d
                denom = 1 - newton * mp.mpc(s)
                step = newton / denom if denom != 0 else newton
                est[i] = zi - step
                rel = abs(step) / (1 + abs(zi))
                if rel > worst:
                    worst = rel
            if worst <= tol:
                break
        for i in range(n):
            z = est[i]
            roots[i] = complex(z)
            p = coefs[0]
            s = abs(coefs[0])
            az = abs(z)
            for c in coefs[1:]:
                p = p * z + c
                s = s * az + abs(c)
            if float(abs(p) / s) > ORACLE_RESIDUAL_TOL:
                bad.append(i)
    if not bad:
        # distinctness guard: two estimates collapsing onto one root would
        # still pass the residual check individually
        srt = sorted(roots, key=lambda r: (r.real, r.imag))
        for i in range(n - 1):
            if abs(srt[i + 1] - srt[i]) < 1e-9 * (1.0 + abs(srt[i])):
                bad.append(i)
    if bad:
        raise OracleNoConvergence(
            f"oracle failed the residual/distinctness check for {len(bad)} "
            f"roots (n={n}, a={a})", bad)
    roots.sort(key=lambda r: (-r.imag, r.real))
    return roots


def upper_half(roots: List[complex], tol: float = 1e-9) -> List[complex]:
    """Zeros with non-negative imaginary part (decreasing Im order)."""
    return [r for r in roots if r.imag >= -tol]
