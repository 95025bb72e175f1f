"""Subtraction-free inverse-power traces and lower bounds on the minimal
singular value of an upper bidiagonal matrix."""

from .bounds import BoundReport, bound_report, theta_bounds, von_matt_bounds
from .counting import OpCount
from .kernels import (
    BACKEND,
    TraceOverflowError,
    TraceSeries,
    inverse_gram_diagonal,
    trace2_fast,
    trace_type1,
    trace_type2,
)
from .matrix import Bidiagonal, MatrixError, ScaleFactor, make_bidiagonal, prescale, unscale

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bidiagonal",
    "BoundReport",
    "MatrixError",
    "OpCount",
    "ScaleFactor",
    "TraceOverflowError",
    "TraceSeries",
    "bound_report",
    "inverse_gram_diagonal",
    "make_bidiagonal",
    "prescale",
    "theta_bounds",
    "trace2_fast",
    "trace_type1",
    "trace_type2",
    "unscale",
    "von_matt_bounds",
]
