"""Command-line front end.

Reads bidiagonal matrices from small text files, runs the selected trace
kernels, and emits traces, bounds, operation counts and optional oracle
cross-checks as JSON or CSV.

Input file format::

    line 1: N
    line 2: N diagonal entries
    line 3: N-1 superdiagonal entries (absent when N = 1)

'#' starts a comment; entries are decimal doubles.

Exit codes: 0 success, 1 input error, 2 trace overflow, 3 oracle-check
failure.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time

import numpy as np

from . import bounds as bounds_mod
from . import oracle as oracle_mod
from .counting import OpCount
from .kernels import TraceOverflowError, TraceSeries, trace2_fast, trace_type1, trace_type2
from .matrix import Bidiagonal, MatrixError, make_bidiagonal, prescale

ORACLE_MAX_N = 512

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_OVERFLOW = 2
EXIT_ORACLE = 3


class ParseError(ValueError):
    """Input file parse error with position information."""

    def __init__(self, path: str, line: int, column: int, message: str):
        super().__init__(f"{path}:{line}:{column}: {message}")


def _logical_lines(path: str) -> list[tuple[int, str]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0]
            if text.strip():
                out.append((lineno, text))
    return out


def _parse_floats(path: str, lineno: int, text: str, expect: int, kind: str) -> list[float]:
    values = []
    for token in text.split():
        column = text.index(token) + 1
        try:
            values.append(float(token))
        except ValueError:
            raise ParseError(path, lineno, column, f"malformed number {token!r}") from None
        if not math.isfinite(values[-1]):
            raise ParseError(path, lineno, column, f"non-finite {kind} entry {token!r}")
        if values[-1] <= 0.0:
            raise ParseError(path, lineno, column, f"non-positive {kind} entry {token!r}")
    if len(values) != expect:
        raise ParseError(path, lineno, 1, f"expected {expect} {kind} entries, found {len(values)}")
    return values


def parse_matrix_file(path: str) -> Bidiagonal:
    """Parse a bidiagonal matrix file; raises ParseError with positions."""
    lines = _logical_lines(path)
    if not lines:
        raise ParseError(path, 1, 1, "empty input")
    lineno, text = lines[0]
    token = text.split()[0]
    try:
        n = int(token)
    except ValueError:
        raise ParseError(path, lineno, 1, f"malformed matrix order {token!r}") from None
    if n < 1:
        raise ParseError(path, lineno, 1, f"matrix order must be >= 1, got {n}")
    expected_lines = 2 if n == 1 else 3
    if len(lines) < expected_lines:
        raise ParseError(path, lineno, 1, f"expected {expected_lines} data lines, found {len(lines)}")
    if len(lines) > expected_lines:
        extra = lines[expected_lines][0]
        raise ParseError(path, extra, 1, "unexpected extra data line")
    diag = _parse_floats(path, lines[1][0], lines[1][1], n, "diagonal")
    superdiag = []
    if n > 1:
        superdiag = _parse_floats(path, lines[2][0], lines[2][1], n - 1, "superdiagonal")
    try:
        return make_bidiagonal(diag, superdiag)
    except MatrixError as exc:
        raise ParseError(path, lines[1][0], 1, str(exc)) from None


def format_matrix(B: Bidiagonal) -> str:
    """Canonical text form; re-parses to a bitwise-identical matrix."""
    lines = [str(B.n), " ".join(_fmt(x) for x in B.diag)]
    if B.n > 1:
        lines.append(" ".join(_fmt(x) for x in B.superdiag))
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _json_dump(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  "{k}": {_json_dump(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ", ".join(_json_dump(v, indent + 1) for v in obj)
        return "[" + items + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if obj is None:
        return "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _run_variant(B: Bidiagonal, variant: str, max_order: int, counter: OpCount | None) -> TraceSeries:
    if variant == "type1":
        return trace_type1(B, max_order, counter)
    if variant == "type2":
        return trace_type2(B, max_order, counter)
    return trace2_fast(B, counter)


def _build_report(B: Bidiagonal, path: str, variant: str, args) -> tuple[dict, int]:
    start = time.perf_counter()
    scale_log2 = None
    work = B
    if args.prescale:
        work, factor = prescale(B)
        scale_log2 = factor.log2_alpha
    counter = OpCount() if args.count_ops else None
    J = _run_variant(work, variant, args.max_order, counter)
    theta_scaled = bounds_mod.theta_bounds(J)
    if J.max_order >= 2:
        rho_scaled, ups_scaled = bounds_mod.von_matt_bounds(J[1], J[2], work.n)
    else:
        rho_scaled, ups_scaled = J[1] ** -0.5, math.nan
    # bounds are rescaled back to the input matrix; J stays with the matrix
    # the kernel actually saw (scale_log2 records which one that was)
    alpha = 1.0 if scale_log2 is None else math.ldexp(1.0, scale_log2)
    report = {
        "input": path,
        "n": B.n,
        "variant": variant,
        "max_order": J.max_order,
        "J": list(J.values),
        "theta": [t / alpha for t in theta_scaled],
        "rho": rho_scaled / alpha,
        "upsilon": ups_scaled / alpha,
    }
    if counter is not None:
        report["ops"] = {
            "adds": counter.adds,
            "subs": counter.subs,
            "muls": counter.muls,
            "divs": counter.divs,
        }
    exit_code = EXIT_OK
    if args.oracle_check:
        ref = oracle_mod.trace_inverse_powers_dense(work, J.max_order)
        rel = [abs(J[p] - ref[p]) / abs(ref[p]) for p in range(1, J.max_order + 1)]
        max_rel = max(rel)
        report["oracle"] = {"J_ref": list(ref.values), "max_rel_err": max_rel}
        if max_rel > args.tol:
            exit_code = EXIT_ORACLE
    if scale_log2 is not None:
        report["scale_log2"] = scale_log2
    report["wall_ms"] = (time.perf_counter() - start) * 1e3
    return report, exit_code


def _emit_json(reports: list[dict], stream) -> None:
    if len(reports) == 1:
        stream.write(_json_dump(reports[0]) + "\n")
    else:
        stream.write(_json_dump(reports) + "\n")


def _emit_csv(reports: list[dict], stream) -> None:
    if not reports:
        return
    m = reports[0]["max_order"]
    header = ["input", "n", "variant", "max_order"]
    header += [f"J_{p}" for p in range(1, m + 1)]
    header += [f"theta_{p}" for p in range(1, m + 1)]
    header += ["rho", "upsilon"]
    with_ops = "ops" in reports[0]
    with_oracle = "oracle" in reports[0]
    with_scale = "scale_log2" in reports[0]
    if with_ops:
        header += ["adds", "subs", "muls", "divs"]
    if with_oracle:
        header += ["oracle_max_rel_err"]
    if with_scale:
        header += ["scale_log2"]
    header += ["wall_ms"]
    writer = csv.writer(stream)
    writer.writerow(header)
    for r in reports:
        row = [r["input"], r["n"], r["variant"], r["max_order"]]
        row += [_fmt(v) for v in r["J"]]
        row += [_fmt(v) for v in r["theta"]]
        row += [_fmt(r["rho"]), _fmt(r["upsilon"])]
        if with_ops:
            ops = r["ops"]
            row += [ops["adds"], ops["subs"], ops["muls"], ops["divs"]]
        if with_oracle:
            row += [_fmt(r["oracle"]["max_rel_err"])]
        if with_scale:
            row += [r["scale_log2"]]
        row += [_fmt(r["wall_ms"])]
        writer.writerow(row)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidiagbounds",
        description="Inverse-power traces and minimal-singular-value lower bounds "
        "for upper bidiagonal matrices.",
    )
    parser.add_argument("--input", action="append", required=True, metavar="PATH",
                        help="matrix file (repeatable)")
    parser.add_argument("--max-order", type=int, default=2, metavar="M",
                        help="highest trace order (default 2)")
    parser.add_argument("--variant", choices=["type1", "type2", "fast2", "both"],
                        default=None,
                        help="kernel to run (default: fast2 when M=2, else type1)")
    parser.add_argument("--count-ops", action="store_true",
                        help="tally scalar arithmetic operations")
    parser.add_argument("--oracle-check", action="store_true",
                        help=f"cross-check against the dense oracle (N <= {ORACLE_MAX_N})")
    parser.add_argument("--prescale", action="store_true",
                        help="scale entries by a power of two into [1, 2) before running")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--tol", type=float, default=1e-9, metavar="REL",
                        help="relative tolerance for --oracle-check (default 1e-9)")
    parser.add_argument("--dump-input", action="store_true",
                        help="echo each parsed matrix in canonical form and exit")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_order < 1:
        print("error: --max-order must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    variant = args.variant or ("fast2" if args.max_order == 2 else "type1")
    if variant == "fast2" and args.max_order != 2:
        print("error: --variant fast2 computes orders 1..2 only (use --max-order 2)",
              file=sys.stderr)
        return EXIT_INPUT

    matrices = []
    try:
        for path in args.input:
            matrices.append((path, parse_matrix_file(path)))
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.dump_input:
        for _, B in matrices:
            sys.stdout.write(format_matrix(B))
        return EXIT_OK

    if args.oracle_check:
        for path, B in matrices:
            if B.n > ORACLE_MAX_N:
                print(f"error: {path}: oracle check refused for N = {B.n} > {ORACLE_MAX_N}",
                      file=sys.stderr)
                return EXIT_INPUT

    variants = ["type1", "type2"] if variant == "both" else [variant]
    reports = []
    exit_code = EXIT_OK
    for path, B in matrices:
        for v in variants:
            try:
                report, code = _build_report(B, path, v, args)
            except TraceOverflowError as exc:
                print(f"error: {path}: {exc}", file=sys.stderr)
                return EXIT_OVERFLOW
            reports.append(report)
            exit_code = max(exit_code, code)

    if args.format == "json":
        _emit_json(reports, sys.stdout)
    else:
        _emit_csv(reports, sys.stdout)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
