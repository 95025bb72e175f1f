"""Public trace kernels with backend selection.

The compiled core (``_core``, built from Cython) is used when available for
the uncounted path; otherwise the pure-Python sweeps take over.  Requesting
operation counts always routes through the instrumented Python path, which is
the same source as the fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..counting import OpCount
from ..matrix import Bidiagonal
from . import _sweeps

try:
    from . import _core

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _core = None
    BACKEND = "python"

__all__ = [
    "BACKEND",
    "TraceSeries",
    "TraceOverflowError",
    "trace_type1",
    "trace_type2",
    "trace2_fast",
    "inverse_gram_diagonal",
]


@dataclass(frozen=True)
class TraceSeries:
    """Traces J_p = Tr((B^T B)^-p) for p = 1 .. max_order."""

    max_order: int
    values: tuple[float, ...]
    variant: str

    def __getitem__(self, p: int) -> float:
        """Value of J_p (1-based order)."""
        if not 1 <= p <= self.max_order:
            raise IndexError(f"order {p} outside 1..{self.max_order}")
        return self.values[p - 1]


class TraceOverflowError(OverflowError):
    """A trace overflowed double precision at some order.

    ``completed_order`` is the largest p with a finite J_p and ``partial``
    holds those values, so lower-order bounds remain usable.
    """

    def __init__(self, variant: str, completed_order: int, partial: tuple[float, ...]):
        super().__init__(
            f"{variant} trace overflowed at order {completed_order + 1} "
            f"(orders 1..{completed_order} are finite)"
        )
        self.variant = variant
        self.completed_order = completed_order
        self.partial = partial


def _series(values: list[float], variant: str) -> TraceSeries:
    for idx, v in enumerate(values):
        if not math.isfinite(v):
            raise TraceOverflowError(variant, idx, tuple(values[:idx]))
    return TraceSeries(len(values), tuple(values), variant)


def _check_order(max_order: int) -> None:
    if not isinstance(max_order, int) or max_order < 1:
        raise ValueError(f"max_order must be a positive integer, got {max_order!r}")


def _run(sweep, variant, *args):
    # q_i can underflow to zero for subnormal entries; treat like overflow
    try:
        return sweep(*args)
    except ZeroDivisionError:
        raise TraceOverflowError(variant, 0, ()) from None


def trace_type1(B: Bidiagonal, max_order: int, counter: OpCount | None = None) -> TraceSeries:
    """Traces of (B^T B)^-p for p = 1 .. max_order by the forward sweep."""
    _check_order(max_order)
    if counter is None and _core is not None:
        values = _run(_core.trace_type1, "type1", B.diag, B.superdiag, max_order)
    else:
        values = _run(_sweeps.sweep_type1, "type1", B.diag, B.superdiag, max_order, counter)
    return _series(values, "type1")


def trace_type2(B: Bidiagonal, max_order: int, counter: OpCount | None = None) -> TraceSeries:
    """Traces of (B B^T)^-p for p = 1 .. max_order by the backward sweep."""
    _check_order(max_order)
    if counter is None and _core is not None:
        values = _run(_core.trace_type2, "type2", B.diag, B.superdiag, max_order)
    else:
        values = _run(_sweeps.sweep_type2, "type2", B.diag, B.superdiag, max_order, counter)
    return _series(values, "type2")


def trace2_fast(B: Bidiagonal, counter: OpCount | None = None) -> TraceSeries:
    """(J_1, J_2) by the optimized single-loop kernel."""
    if counter is None and _core is not None:
        j1, j2 = _run(_core.trace_fast2, "fast2", B.diag, B.superdiag)
    else:
        j1, j2 = _run(_sweeps.sweep_fast2, "fast2", B.diag, B.superdiag, counter)
    return _series([j1, j2], "fast2")


def inverse_gram_diagonal(B: Bidiagonal, side: str) -> np.ndarray:
    """Diagonal of (B B^T)^-1 (side='left') or (B^T B)^-1 (side='right').

    These are the first-order per-index values of the forward and backward
    sweeps, respectively.
    """
    if side == "left":
        out = _sweeps.first_order_diag(B.diag, B.superdiag, forward=True)
    elif side == "right":
        out = _sweeps.first_order_diag(B.diag, B.superdiag, forward=False)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return np.asarray(out)
