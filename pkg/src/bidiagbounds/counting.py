"""Instrumented scalar arithmetic for operation counting.

The trace sweeps are written against plain ``float`` semantics.  To count
operations, the same code runs on ``CountedScalar`` values, which tally every
add/sub/mul/div into a shared ``OpCount`` and otherwise behave like doubles.
The uncounted path never pays for this: it uses plain floats (or the compiled
kernel core).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["OpCount", "CountedScalar", "lifter"]


@dataclass
class OpCount:
    """Tally of scalar arithmetic operations performed by a kernel."""

    adds: int = 0
    subs: int = 0
    muls: int = 0
    divs: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.subs + self.muls + self.divs

    def __iadd__(self, other: "OpCount") -> "OpCount":
        self.adds += other.adds
        self.subs += other.subs
        self.muls += other.muls
        self.divs += other.divs
        return self


def _val(x) -> float:
    return x.value if isinstance(x, CountedScalar) else x


class CountedScalar:
    """A double that reports every arithmetic operation to an OpCount."""

    __slots__ = ("value", "tally")

    def __init__(self, value: float, tally: OpCount):
        self.value = value
        self.tally = tally

    def __add__(self, other):
        self.tally.adds += 1
        return CountedScalar(self.value + _val(other), self.tally)

    __radd__ = __add__

    def __sub__(self, other):
        self.tally.subs += 1
        return CountedScalar(self.value - _val(other), self.tally)

    def __rsub__(self, other):
        self.tally.subs += 1
        return CountedScalar(_val(other) - self.value, self.tally)

    def __mul__(self, other):
        self.tally.muls += 1
        return CountedScalar(self.value * _val(other), self.tally)

    __rmul__ = __mul__

    def __truediv__(self, other):
        self.tally.divs += 1
        return CountedScalar(self.value / _val(other), self.tally)

    def __rtruediv__(self, other):
        self.tally.divs += 1
        return CountedScalar(_val(other) / self.value, self.tally)

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"CountedScalar({self.value!r})"


def lifter(tally: OpCount | None):
    """Return a function embedding plain floats into the chosen scalar domain."""
    if tally is None:
        return float
    return lambda v: CountedScalar(float(v), tally)


def finite(x) -> bool:
    return math.isfinite(_val(x))
