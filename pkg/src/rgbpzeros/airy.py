"""Negative zeros of the Airy function Ai, ordered by |value|."""

from __future__ import annotations

import functools

from scipy import special

from .errors import NonpositiveIndex


def airy_zero_seed(m: int) -> float:
    """Asymptotic estimate of the m-th negative zero of Ai."""
    t = 3.0 * 3.141592653589793 * (4 * m - 1) / 8.0
    t2 = t * t
    # T(t) = t^(2/3) (1 + 5/48 t^-2 - 5/36 t^-4 + ...)
    return -(t ** (2.0 / 3.0)) * (1.0 + 5.0 / (48.0 * t2) - 5.0 / (36.0 * t2 * t2))


@functools.lru_cache(maxsize=None)
def airy_zero(m: int) -> float:
    """m-th negative zero of Ai, refined by Newton from the asymptotic seed."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise NonpositiveIndex(f"Airy zero index must be >= 1, got {m!r}")
    x = airy_zero_seed(m)
    for _ in range(20):
        ai, aip, _, _ = special.airy(x)
        dx = ai / aip
        x -= dx
        if abs(dx) <= 1e-16 * abs(x):
            break
    return float(x)
