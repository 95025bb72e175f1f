#!/usr/bin/env python3
"""Compare the compiled (Cython) and pure-Python trace backends.

Runs each kernel on seeded random matrices over a grid of sizes and orders,
times both implementations, and verifies the results agree bitwise (the two
paths execute the same scalar operations in the same order).

Usage::

    python benchmarks/backend_compare.py [--repeats 5] [--seed 20240611]
"""

from __future__ import annotations

import argparse
import sys
import time

from bidiagbounds.bench import random_bidiagonal
from bidiagbounds.kernels import BACKEND, _core, _sweeps

import numpy as np

GRID = [
    # (N, M)
    (100, 2),
    (1000, 2),
    (10000, 2),
    (100, 10),
    (1000, 10),
    (100, 30),
    (1000, 30),
]


def _time(fn, args, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = fn(*args)
        best = min(best, time.perf_counter_ns() - start)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20240611)
    args = parser.parse_args(argv)

    if BACKEND != "cython":
        print("compiled core not available; nothing to compare", file=sys.stderr)
        return 1

    rng = np.random.default_rng(args.seed)
    pairs = {
        "type1": (_core.trace_type1, _sweeps.sweep_type1),
        "type2": (_core.trace_type2, _sweeps.sweep_type2),
        "fast2": (_core.trace_fast2, _sweeps.sweep_fast2),
    }

    print(f"{'variant':8s} {'N':>6s} {'M':>3s} {'cython_us':>10s} {'python_us':>10s} {'speedup':>8s}")
    for n, m in GRID:
        B = random_bidiagonal(n, rng)
        for variant, (fast, pure) in pairs.items():
            if variant == "fast2":
                if m != 2:
                    continue
                fast_args = (B.diag, B.superdiag)
                pure_args = (B.diag, B.superdiag)
            else:
                fast_args = (B.diag, B.superdiag, m)
                pure_args = (B.diag, B.superdiag, m)
            t_fast, r_fast = _time(fast, fast_args, args.repeats)
            t_pure, r_pure = _time(pure, pure_args, args.repeats)
            if list(r_fast) != list(r_pure):
                print(f"MISMATCH for {variant} N={n} M={m}", file=sys.stderr)
                return 2
            print(
                f"{variant:8s} {n:6d} {m:3d} {t_fast / 1e3:10.1f} {t_pure / 1e3:10.1f} "
                f"{t_pure / t_fast:7.1f}x"
            )
    print("\nall results bitwise identical between backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
