"""Binomial coefficient rows built by the Pascal recurrence, in doubles.

Rows are exact for p <= 52 (all C(p, k) below 2**53); beyond that they are
best-effort doubles, which is also what the trace recurrences consume.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["BinomialRow", "binomial_row"]


@dataclass(frozen=True)
class BinomialRow:
    """Coefficients C(p, k) for k = 1 .. p as doubles."""

    p: int
    coeffs: tuple[float, ...]


def binomial_row(prev: BinomialRow | None, p: int) -> BinomialRow:
    """Build the row for p from the row for p - 1 (or from scratch).

    Uses S_k(p) = S_{k-1}(p-1) + S_k(p-1) with S_1(p) = p and S_p(p) = 1.
    """
    if p < 2:
        raise ValueError(f"binomial rows start at p = 2, got {p}")
    if prev is None:
        prev = BinomialRow(1, (1.0,))
        for r in range(2, p):
            prev = binomial_row(prev, r)
    elif prev.p != p - 1:
        raise ValueError(f"previous row is for p = {prev.p}, expected {p - 1}")
    coeffs = [float(p)]
    for k in range(2, p):
        coeffs.append(prev.coeffs[k - 2] + prev.coeffs[k - 1])
    if p > 1:
        coeffs.append(1.0)
    return BinomialRow(p, tuple(coeffs))
