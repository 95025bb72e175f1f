"""Dense brute-force reference computations.

Everything here is deliberately independent of the trace kernels: Gram
matrices are assembled explicitly, inverses come from Gauss-Jordan
elimination, eigenvalues from cyclic Jacobi rotations, and trace series from
repeated dense multiplication.  Intended for desk-scale verification only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import TraceSeries
from .matrix import Bidiagonal

__all__ = [
    "DenseSymmetric",
    "SingularMatrixError",
    "JacobiConvergenceError",
    "gram",
    "dense_inverse",
    "trace_inverse_powers_dense",
    "eigen_symmetric",
    "sigma_min_dense",
    "inverse_diagonals",
]

_PIVOT_FLOOR = 1e-300
_JACOBI_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 100


class SingularMatrixError(ValueError):
    """Matrix is numerically singular."""


class JacobiConvergenceError(RuntimeError):
    """Jacobi iteration failed to converge; signals a defect."""


@dataclass(frozen=True)
class DenseSymmetric:
    """Dense symmetric matrix (tridiagonal when built from a Bidiagonal)."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def gram(B: Bidiagonal, side: str) -> DenseSymmetric:
    """B B^T ('left') or B^T B ('right') as a dense symmetric matrix."""
    q, e = B.squared()
    n = B.n
    A = np.zeros((n, n))
    if side == "right":
        A[0, 0] = q[0]
        for i in range(1, n):
            A[i, i] = q[i] + e[i - 1]
            off = np.sqrt(q[i - 1] * e[i - 1])
            A[i - 1, i] = A[i, i - 1] = off
    elif side == "left":
        for i in range(n - 1):
            A[i, i] = q[i] + e[i]
            off = np.sqrt(q[i + 1] * e[i])
            A[i, i + 1] = A[i + 1, i] = off
        A[n - 1, n - 1] = q[n - 1]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return DenseSymmetric(A)


def dense_inverse(A: DenseSymmetric) -> DenseSymmetric:
    """Inverse by Gauss-Jordan elimination with partial pivoting."""
    n = A.n
    work = A.entries.astype(np.float64, copy=True)
    inv = np.eye(n)
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(work[col:, col])))
        if abs(work[pivot_row, col]) < _PIVOT_FLOOR:
            raise SingularMatrixError(f"pivot below {_PIVOT_FLOOR} in column {col}")
        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]
            inv[[col, pivot_row]] = inv[[pivot_row, col]]
        p = work[col, col]
        work[col] /= p
        inv[col] /= p
        for row in range(n):
            if row != col and work[row, col] != 0.0:
                factor = work[row, col]
                work[row] -= factor * work[col]
                inv[row] -= factor * inv[col]
    return DenseSymmetric(inv)


def trace_inverse_powers_dense(B: Bidiagonal, max_order: int) -> TraceSeries:
    """J_p for p = 1 .. max_order via the dense inverse of B^T B and its powers."""
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    inv = dense_inverse(gram(B, "right")).entries
    values = []
    power = inv
    for _ in range(max_order):
        values.append(float(np.trace(power)))
        power = power @ inv
    return TraceSeries(max_order, tuple(values), "dense")


def eigen_symmetric(A: DenseSymmetric) -> np.ndarray:
    """All eigenvalues (ascending) by the cyclic Jacobi method."""
    M = A.entries.astype(np.float64, copy=True)
    n = M.shape[0]
    norm = np.linalg.norm(M)
    if n == 1 or norm == 0.0:
        return np.sort(np.diag(M))
    for _ in range(_JACOBI_MAX_SWEEPS):
        offmat = M.copy()
        np.fill_diagonal(offmat, 0.0)
        if np.linalg.norm(offmat) <= _JACOBI_TOL * norm:
            return np.sort(np.diag(M))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = M[p, q]
                if abs(apq) <= 1e-30 * norm:
                    M[p, q] = M[q, p] = 0.0
                    continue
                # classic Jacobi rotation annihilating M[p, q]
                tau = (M[q, q] - M[p, p]) / (2.0 * apq)
                if tau == 0.0:
                    t = 1.0
                elif abs(tau) > 1e150:  # tau*tau would overflow
                    t = 0.5 / tau
                else:
                    t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                cs = 1.0 / np.sqrt(1.0 + t * t)
                sn = t * cs
                rp = M[p, :].copy()
                rq = M[q, :].copy()
                M[p, :] = cs * rp - sn * rq
                M[q, :] = sn * rp + cs * rq
                cp = M[:, p].copy()
                cq = M[:, q].copy()
                M[:, p] = cs * cp - sn * cq
                M[:, q] = sn * cp + cs * cq
                M[p, q] = M[q, p] = 0.0
    raise JacobiConvergenceError(f"no convergence after {_JACOBI_MAX_SWEEPS} sweeps")


def sigma_min_dense(B: Bidiagonal) -> float:
    """Smallest singular value: sqrt of the smallest eigenvalue of B^T B."""
    eigs = eigen_symmetric(gram(B, "right"))
    return float(np.sqrt(eigs[0]))


def inverse_diagonals(B: Bidiagonal, side: str) -> np.ndarray:
    """Diagonal of (B B^T)^-1 ('left') or (B^T B)^-1 ('right')."""
    return np.diag(dense_inverse(gram(B, side)).entries).copy()
