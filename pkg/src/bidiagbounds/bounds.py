"""Lower bounds on the minimal singular value from inverse-power traces."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kernels import TraceSeries

__all__ = ["BoundReport", "theta_bounds", "von_matt_bounds", "bound_report"]

# rounding slack for the upsilon radicand, which is >= 0 in exact arithmetic
_RADICAND_SLACK = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Lower bounds for sigma_min: the theta sequence plus von Matt's pair."""

    theta: tuple[float, ...]
    rho: float
    upsilon: float
    n: int


def theta_bounds(J: TraceSeries) -> list[float]:
    """theta_p = J_p ** (-1 / (2 p)) for p = 1 .. max_order."""
    out = []
    for p in range(1, J.max_order + 1):
        v = J[p]
        if not (math.isfinite(v) and v > 0.0):
            raise ValueError(f"J_{p} = {v!r} is not a positive finite trace")
        out.append(v ** (-1.0 / (2.0 * p)))
    return out


def von_matt_bounds(J1: float, J2: float, n: int) -> tuple[float, float]:
    """von Matt's bounds (rho, upsilon) from the first two traces.

    rho = J1**(-1/2) and
    upsilon = sqrt(1/J1) * sqrt(n / (1 + sqrt((n-1) * (n*J2/J1**2 - 1)))).
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    if not (math.isfinite(J1) and J1 > 0.0) or not (math.isfinite(J2) and J2 > 0.0):
        raise ValueError("traces must be positive and finite")
    rho = J1 ** -0.5
    radicand = n * J2 / (J1 * J1) - 1.0
    if radicand < 0.0:
        if radicand < -_RADICAND_SLACK:
            raise ValueError(
                f"n*J2 >= J1**2 violated (radicand {radicand:.3e}); inconsistent traces"
            )
        radicand = 0.0
    upsilon = math.sqrt(1.0 / J1) * math.sqrt(n / (1.0 + math.sqrt((n - 1) * radicand)))
    return rho, upsilon


def bound_report(J: TraceSeries, n: int) -> BoundReport:
    """Bundle theta_1..theta_M with rho and upsilon (needs max_order >= 2)."""
    theta = theta_bounds(J)
    if J.max_order >= 2:
        rho, upsilon = von_matt_bounds(J[1], J[2], n)
    else:
        rho = J[1] ** -0.5
        upsilon = math.nan
    return BoundReport(tuple(theta), rho, upsilon, n)
