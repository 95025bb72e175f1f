"""Reference implementations of the subtraction-free trace sweeps.

These run on plain floats (fallback path) or on CountedScalar values
(op-counting path) — the arithmetic is written once and the scalar type is
selected by the caller through ``tally``.  The compiled core in ``_core.pyx``
mirrors the plain-float path for speed.

All sweeps go column-by-column and keep only the previous column of the
order-p state, so working memory is O(M) regardless of N.
"""

from __future__ import annotations

from ..counting import OpCount, finite, lifter

__all__ = ["sweep_type1", "sweep_type2", "sweep_fast2", "first_order_diag"]


def _binomial_table(m: int, lift):
    """Rows of C(p, k) for p = 1 .. m, built by the Pascal recurrence.

    table[p][k] holds C(p, k) for 1 <= k <= p (index 0 unused).  The adds of
    the recurrence happen in the lifted scalar domain so they are tallied.
    """
    table = [None, [None, lift(1.0)]]
    for p in range(2, m + 1):
        prev = table[p - 1]
        row = [None, lift(float(p))]
        for k in range(2, p):
            row.append(prev[k - 1] + prev[k])
        row.append(lift(1.0))
        table.append(row)
    return table


def _divide_factorials(sums, m, lift):
    """Turn the per-order sums of H into traces: J_p = sums[p] / (p-1)!.

    The factorial is kept as a running double product; once it overflows
    (p > 171) the division falls back to dividing out 2 .. p-1 one by one.
    """
    J = []
    fact = lift(1.0)
    for p in range(1, m + 1):
        if finite(fact):
            J.append(float(sums[p] / fact))
        else:
            v = sums[p]
            for r in range(2, p):
                v = v / r
            J.append(float(v))
        fact = fact * p
    return J


def sweep_type1(diag, superdiag, m: int, tally: OpCount | None = None) -> list[float]:
    """Forward sweep: J_p = Tr((B^T B)^-p) for p = 1 .. m."""
    lift = lifter(tally)
    n = len(diag)
    b = [lift(x) for x in diag]
    c = [lift(x) for x in superdiag]
    C = _binomial_table(m, lift)
    zero = lift(0.0)

    # first column: h_1^(1) = 1/q_1, h_1^(p) = 0 for p >= 2
    ib = 1.0 / (b[0] * b[0])
    h = [None] * (m + 1)
    H = [None] * (m + 1)
    h[1] = ib
    H[1] = h[1]
    for p in range(2, m + 1):
        h[p] = zero
        H[p] = C[p - 1][1] * h[1] * H[p - 1]
    sums = [None] + H[1:]

    for i in range(1, n):
        ib = 1.0 / (b[i] * b[i])
        f = c[i - 1] * c[i - 1] * ib
        hp = h
        h = [None] * (m + 1)
        h[1] = f * hp[1] + ib
        for p in range(2, m + 1):
            tmp = zero
            for k in range(1, p - 1):
                tmp = tmp + C[p][k] * hp[k] * h[p - k]
            h[p] = f * (hp[p] + p * hp[1] * hp[p - 1]) + tmp
        H = [None] * (m + 1)
        H[1] = h[1]
        for p in range(2, m + 1):
            tmp = zero
            for k in range(1, p):
                tmp = tmp + C[p - 1][k] * h[k] * H[p - k]
            H[p] = h[p] + tmp
        for p in range(1, m + 1):
            sums[p] = sums[p] + H[p]

    return _divide_factorials(sums, m, lift)


def sweep_type2(diag, superdiag, m: int, tally: OpCount | None = None) -> list[float]:
    """Backward sweep: J_p = Tr((B B^T)^-p) for p = 1 .. m."""
    lift = lifter(tally)
    n = len(diag)
    b = [lift(x) for x in diag]
    c = [lift(x) for x in superdiag]
    C = _binomial_table(m, lift)
    zero = lift(0.0)

    # last column: h_N^(1) = 1/q_N, h_N^(p) = 0 for p >= 2
    ib = 1.0 / (b[n - 1] * b[n - 1])
    h = [None] * (m + 1)
    H = [None] * (m + 1)
    h[1] = ib
    H[1] = h[1]
    for p in range(2, m + 1):
        h[p] = zero
        H[p] = C[p - 1][1] * h[1] * H[p - 1]
    sums = [None] + H[1:]

    for i in range(n - 2, -1, -1):
        ib = 1.0 / (b[i] * b[i])
        f = c[i] * c[i] * ib
        hp = h
        h = [None] * (m + 1)
        h[1] = f * hp[1] + ib
        for p in range(2, m + 1):
            tmp = zero
            for k in range(1, p - 1):
                tmp = tmp + C[p][k] * hp[k] * h[p - k]
            h[p] = f * (hp[p] + p * hp[1] * hp[p - 1]) + tmp
        H = [None] * (m + 1)
        H[1] = h[1]
        for p in range(2, m + 1):
            tmp = zero
            for k in range(1, p):
                tmp = tmp + C[p - 1][k] * h[k] * H[p - k]
            H[p] = h[p] + tmp
        for p in range(1, m + 1):
            sums[p] = sums[p] + H[p]

    return _divide_factorials(sums, m, lift)


def sweep_fast2(diag, superdiag, tally: OpCount | None = None) -> tuple[float, float]:
    """Single-loop, array-free computation of (J_1, J_2).

    The J_2 recurrence uses exactly adds = 4N-4, muls = 6N-4, divs = N.  The
    running J_1 total is bookkeeping on already-computed values and is kept
    outside the tallied arithmetic so the counts stay comparable with the
    J_2-only operation budget.
    """
    lift = lifter(tally)
    n = len(diag)
    b = [lift(x) for x in diag]
    c = [lift(x) for x in superdiag]

    h1 = 1.0 / (b[0] * b[0])
    ph = h1 * h1
    h2 = ph
    j2 = h2
    j1 = float(h1)
    for i in range(1, n):
        ib = 1.0 / (b[i] * b[i])
        f = c[i - 1] * c[i - 1] * ib
        h2 = f * (h2 + ph)
        h1 = f * h1 + ib
        ph = h1 * h1
        h2 = h2 + ph
        j2 = j2 + h2
        j1 += float(h1)
    return j1, float(j2)


def first_order_diag(diag, superdiag, forward: bool) -> list[float]:
    """Per-index first-order values h_i^(1).

    With ``forward=True`` this is the forward sweep, whose values are the
    diagonal entries of (B B^T)^-1; with ``forward=False`` the backward
    sweep, giving the diagonal of (B^T B)^-1.
    """
    n = len(diag)
    out = [0.0] * n
    if forward:
        ib = 1.0 / (diag[0] * diag[0])
        out[0] = ib
        for i in range(1, n):
            ib = 1.0 / (diag[i] * diag[i])
            f = superdiag[i - 1] * superdiag[i - 1] * ib
            out[i] = f * out[i - 1] + ib
    else:
        ib = 1.0 / (diag[n - 1] * diag[n - 1])
        out[n - 1] = ib
        for i in range(n - 2, -1, -1):
            ib = 1.0 / (diag[i] * diag[i])
            f = superdiag[i] * superdiag[i] * ib
            out[i] = f * out[i + 1] + ib
    return out
