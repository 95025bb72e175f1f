"""Operation-count benchmarking and cost-model fitting.

Matrices are drawn from a seeded PCG64 generator (entries uniform in
[0.5, 2.0]), so counts are reproducible run to run; wall times are recorded
for information only.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .counting import OpCount
from .kernels import TraceOverflowError, trace2_fast, trace_type1, trace_type2
from .matrix import Bidiagonal, make_bidiagonal

__all__ = ["CostRecord", "random_bidiagonal", "count_sweep", "fit_cost_model", "write_csv"]

DEFAULT_SEED = 20240611
ENTRY_RANGE = (0.5, 2.0)

_KERNELS = {
    "type1": lambda B, m, ctr: trace_type1(B, m, ctr),
    "type2": lambda B, m, ctr: trace_type2(B, m, ctr),
    "fast2": lambda B, m, ctr: trace2_fast(B, ctr),
}


@dataclass(frozen=True)
class CostRecord:
    n: int
    m: int
    variant: str
    ops: OpCount
    wall_ns: int
    overflowed: bool = False


def random_bidiagonal(
    n: int,
    rng: np.random.Generator,
    lo: float = ENTRY_RANGE[0],
    hi: float = ENTRY_RANGE[1],
) -> Bidiagonal:
    """Random matrix of order n with entries uniform in [lo, hi]."""
    diag = rng.uniform(lo, hi, size=n)
    superdiag = rng.uniform(lo, hi, size=max(n - 1, 0))
    return make_bidiagonal(diag, superdiag)


def count_sweep(
    Ns: Sequence[int],
    Ms: Sequence[int],
    variants: Sequence[str],
    seed: int = DEFAULT_SEED,
) -> list[CostRecord]:
    """Run each (N, M, variant) combination with counting arithmetic."""
    for v in variants:
        if v not in _KERNELS:
            raise ValueError(f"unknown variant {v!r}")
    rng = np.random.default_rng(seed)
    records = []
    for n in Ns:
        B = random_bidiagonal(n, rng)
        for m in Ms:
            for variant in variants:
                counter = OpCount()
                overflowed = False
                start = time.perf_counter_ns()
                try:
                    _KERNELS[variant](B, m, counter)
                except TraceOverflowError:
                    overflowed = True
                wall = time.perf_counter_ns() - start
                records.append(CostRecord(n, m, variant, counter, wall, overflowed))
    return records


def fit_cost_model(records: Iterable[CostRecord]) -> tuple[float | None, float | None, float]:
    """Fit ops ~ const * M**a * N**b by least squares in log space.

    Returns (a, b, rms_residual).  An exponent comes back as None when its
    axis is constant over the records (e.g. fast2 is always M = 2).
    """
    recs = [r for r in records if not r.overflowed]
    if len(recs) < 2:
        raise ValueError("need at least two records to fit a cost model")
    logm = np.log([r.m for r in recs])
    logn = np.log([r.n for r in recs])
    logops = np.log([r.ops.total for r in recs])
    cols = [np.ones(len(recs))]
    vary_m = len({r.m for r in recs}) > 1
    vary_n = len({r.n for r in recs}) > 1
    if not vary_m and not vary_n:
        raise ValueError("degenerate grid: M and N are both constant")
    if vary_m:
        cols.append(logm)
    if vary_n:
        cols.append(logn)
    X = np.column_stack(cols)
    coef, *_ = np.linalg.lstsq(X, logops, rcond=None)
    residual = float(np.sqrt(np.mean((X @ coef - logops) ** 2)))
    idx = 1
    a = b = None
    if vary_m:
        a = float(coef[idx])
        idx += 1
    if vary_n:
        b = float(coef[idx])
    return a, b, residual


def write_csv(records: Iterable[CostRecord], stream: TextIO) -> None:
    """Emit records as CSV: N,M,variant,adds,subs,muls,divs,wall_ns."""
    writer = csv.writer(stream)
    writer.writerow(["N", "M", "variant", "adds", "subs", "muls", "divs", "wall_ns"])
    for r in records:
        writer.writerow(
            [r.n, r.m, r.variant, r.ops.adds, r.ops.subs, r.ops.muls, r.ops.divs, r.wall_ns]
        )
