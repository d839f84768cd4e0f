"""Problem parameters shared by every stage of the zero computation.

For degree ``n`` and real parameter ``a`` the scaled quantities are

    u = n + 1/2,    alpha = (a - 2)/u,    sigma = sqrt(1 + alpha),

and the two turning points of the scaled differential equation sit at
``z = +/- i*sigma - alpha/2``.  The asymptotic theory needs ``a`` inside the
window ``-delta1*n + 3/2 <= a <= delta2*n`` so that the turning points stay
bounded away from each other and from the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidDegree, ParameterOutOfRange

DEFAULT_DELTA1 = 0.9
DEFAULT_DELTA2 = 10.0


@dataclass(frozen=True)
class ProblemParams:
    n: int
    a: float
    u: float
    alpha: float
    sigma: float
    z1: complex
    z2: complex

    @property
    def num_upper_zeros(self) -> int:
        return (self.n + 1) // 2


def make_params(n: int, a: float,
                delta1: float = DEFAULT_DELTA1,
                delta2: float = DEFAULT_DELTA2) -> ProblemParams:
    """Validate (n, a) and derive the fixed per-problem constants.

    Raises InvalidDegree for n < 1 and ParameterOutOfRange when ``a`` falls
    outside the admissibility window controlled by delta1 and delta2.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {n!r}")
    if not 0.0 < delta1 < 1.0:
        raise ValueError(f"delta1 must lie in (0, 1), got {delta1}")
    if delta2 <= 0.0:
        raise ValueError(f"delta2 must be positive, got {delta2}")
    a = float(a)
    lo = -delta1 * n + 1.5
    hi = delta2 * n
    if not lo <= a <= hi:
        raise ParameterOutOfRange(
            f"a={a} outside admissible range [{lo}, {hi}] for n={n}")
    u = n + 0.5
    alpha = (a - 2.0) / u
    sigma = math.sqrt(1.0 + alpha)
    z1 = complex(-0.5 * alpha, sigma)
    z2 = z1.conjugate()
    return ProblemParams(n=n, a=a, u=u, alpha=alpha, sigma=sigma, z1=z1, z2=z2)
