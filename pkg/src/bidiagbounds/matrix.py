"""Upper bidiagonal matrix representation and exact power-of-two scaling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["Bidiagonal", "ScaleFactor", "MatrixError", "make_bidiagonal", "prescale", "unscale"]


class MatrixError(ValueError):
    """Raised for invalid bidiagonal matrix data."""


@dataclass(frozen=True)
class ScaleFactor:
    """Exact scaling factor alpha = 2**log2_alpha."""

    log2_alpha: int

    @property
    def alpha(self) -> float:
        return math.ldexp(1.0, self.log2_alpha)

    def inverse(self) -> "ScaleFactor":
        return ScaleFactor(-self.log2_alpha)


@dataclass(frozen=True)
class Bidiagonal:
    """Square upper bidiagonal matrix with positive diagonal entries.

    Stores the entries themselves (diag b_i, superdiag c_i); the squared
    quantities q_i = b_i**2 and e_i = c_i**2 consumed by the trace kernels
    are computed on demand.
    """

    diag: np.ndarray
    superdiag: np.ndarray
    permissive: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return self.diag.shape[0]

    def squared(self) -> tuple[np.ndarray, np.ndarray]:
        """Return (q, e) with q_i = b_i**2 and e_i = c_i**2."""
        return self.diag * self.diag, self.superdiag * self.superdiag

    def scaled(self, s: int) -> "Bidiagonal":
        """Return 2**s times this matrix (exact in binary floating point)."""
        factor = math.ldexp(1.0, s)
        out = Bidiagonal.__new__(Bidiagonal)
        object.__setattr__(out, "diag", _frozen(self.diag * factor))
        object.__setattr__(out, "superdiag", _frozen(self.superdiag * factor))
        object.__setattr__(out, "permissive", self.permissive)
        return out


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


def make_bidiagonal(diag, superdiag=(), permissive: bool = False) -> Bidiagonal:
    """Validate entries and build a Bidiagonal.

    Diagonal entries must be positive and finite.  Superdiagonal entries must
    be positive and finite as well, unless ``permissive`` is set, in which
    case zeros are allowed (the matrix then decouples into diagonal blocks).
    """
    d = np.asarray(diag, dtype=np.float64)
    c = np.asarray(superdiag, dtype=np.float64)
    if d.ndim != 1 or c.ndim != 1:
        raise MatrixError("diag and superdiag must be one-dimensional")
    if d.size < 1:
        raise MatrixError("matrix order must be at least 1")
    if c.size != d.size - 1:
        raise MatrixError(
            f"superdiagonal has {c.size} entries, expected {d.size - 1} for order {d.size}"
        )
    if not np.all(np.isfinite(d)):
        raise MatrixError("non-finite diagonal entry")
    if not np.all(d > 0.0):
        raise MatrixError("non-positive diagonal entry")
    if not np.all(np.isfinite(c)):
        raise MatrixError("non-finite superdiagonal entry")
    if np.any(c < 0.0):
        raise MatrixError("negative superdiagonal entry")
    if not permissive and not np.all(c > 0.0):
        raise MatrixError("zero superdiagonal entry (pass permissive=True to allow)")
    return Bidiagonal(_frozen(d), _frozen(c), permissive)


def prescale(B: Bidiagonal) -> tuple[Bidiagonal, ScaleFactor]:
    """Scale B by a power of two so its largest entry lands in [1, 2).

    Returns (B', factor) with B' = alpha * B and factor.alpha = alpha.  The
    scaling is exact, so ``unscale`` reproduces B bitwise.  Trace values obey
    J_p(B') = alpha**(-2p) * J_p(B) and bounds obey theta(B') = alpha * theta(B).
    """
    m = float(np.max(B.diag))
    if B.superdiag.size:
        m = max(m, float(np.max(B.superdiag)))
    # frexp: m = f * 2**exp with f in [0.5, 1); m * 2**(1 - exp) is in [1, 2)
    _, exp = math.frexp(m)
    s = 1 - exp
    return B.scaled(s), ScaleFactor(s)


def unscale(B_scaled: Bidiagonal, factor: ScaleFactor) -> Bidiagonal:
    """Undo ``prescale`` exactly."""
    return B_scaled.scaled(-factor.log2_alpha)
