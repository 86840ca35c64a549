"""
Module: tfn
Layer: numerics

Triangular fuzzy numbers (lo, mid, hi) with the approximate arithmetic used by
the fuzzy DEA models, membership and alpha-cut queries, and min/mean/max
fuzzification of raw observations.

mul and div are the usual positive-TFN approximations (componentwise product,
crossed quotient), not alpha-cut-exact results.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple
import math

import numpy as np


class TfnError(Exception):
    pass


class TfnDomainError(TfnError):
    pass


class TfnOrderError(TfnError):
    pass


@dataclass(frozen=True)
class Interval:
    """Closed interval [lower, upper]."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise TfnOrderError(f"Interval lower {self.lower} > upper {self.upper}")

    def contains(self, w: float) -> bool:
        return self.lower <= w <= self.upper

    def issubset(self, other: "Interval") -> bool:
        return other.lower <= self.lower and self.upper <= other.upper


@dataclass(frozen=True)
class TFN:
    """
    Triangular fuzzy number.

    Construction rejects non-finite components and any ordering other than
    lo <= mid <= hi.
    """

    lo: float
    mid: float
    hi: float

    def __post_init__(self) -> None:
        for name in ("lo", "mid", "hi"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(
                value, (int, float, np.floating, np.integer)
            ):
                raise TfnError(f"TFN.{name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise TfnError(f"TFN.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if not (self.lo <= self.mid <= self.hi):
            raise TfnOrderError(
                f"TFN requires lo <= mid <= hi, got ({self.lo}, {self.mid}, {self.hi})"
            )

    @classmethod
    def crisp(cls, value: float) -> "TFN":
        return cls(value, value, value)

    @property
    def is_crisp(self) -> bool:
        return self.lo == self.mid == self.hi

    @property
    def is_positive(self) -> bool:
        return self.lo > 0

    @property
    def is_nonnegative(self) -> bool:
        return self.lo >= 0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.lo, self.mid, self.hi)

    def scale(self, k: float) -> "TFN":
        """Multiply by a positive crisp scalar."""
        if not k > 0:
            raise TfnDomainError(f"scale factor must be > 0, got {k!r}")
        return TFN(self.lo * k, self.mid * k, self.hi * k)

    def __add__(self, other: "TFN") -> "TFN":
        return add(self, other)

    def __sub__(self, other: "TFN") -> "TFN":
        return sub(self, other)

    def __mul__(self, other: "TFN") -> "TFN":
        return mul(self, other)

    def __truediv__(self, other: "TFN") -> "TFN":
        return div(self, other)

    def __str__(self) -> str:
        return f"({self.lo:g}, {self.mid:g}, {self.hi:g})"


def _require_positive(op: str, *operands: TFN) -> None:
    for operand in operands:
        if not operand.is_positive:
            raise TfnDomainError(f"{op} requires positive TFNs, got {operand}")


def add(a: TFN, b: TFN) -> TFN:
    return TFN(a.lo + b.lo, a.mid + b.mid, a.hi + b.hi)


def sub(a: TFN, b: TFN) -> TFN:
    return TFN(a.lo - b.hi, a.mid - b.mid, a.hi - b.lo)


def mul(a: TFN, b: TFN) -> TFN:
    _require_positive("mul", a, b)
    return TFN(a.lo * b.lo, a.mid * b.mid, a.hi * b.hi)


def div(a: TFN, b: TFN) -> TFN:
    _require_positive("div", a, b)
    return TFN(a.lo / b.hi, a.mid / b.mid, a.hi / b.lo)


def membership(a: TFN, w: float) -> float:
    """
    Degree to which w belongs to a.

    A side of zero width is dropped, so membership at mid is always 1 and the
    crisp TFN c has membership 1 at c and 0 elsewhere.
    """
    if w == a.mid:
        return 1.0
    if w < a.mid:
        if w <= a.lo:
            return 0.0
        return (w - a.lo) / (a.mid - a.lo)
    if w >= a.hi:
        return 0.0
    return (a.hi - w) / (a.hi - a.mid)


def alpha_cut(a: TFN, alpha: float) -> Interval:
    """
    Interval of points with membership >= alpha.

    alpha = 0 returns the closed support [lo, hi] rather than the whole line.
    """
    if not (0.0 <= alpha <= 1.0):
        raise TfnDomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    lower = a.lo + alpha * (a.mid - a.lo)
    upper = a.hi - alpha * (a.hi - a.mid)
    # rounding can cross at alpha = 1 on wide supports
    return Interval(min(lower, a.mid), max(upper, a.mid))


def from_observations(samples: Iterable[float]) -> TFN:
    """(min, mean, max) of the samples."""
    values = np.asarray(list(samples), dtype=float)
    if values.size == 0:
        raise TfnDomainError("from_observations needs at least one sample")
    if not np.all(np.isfinite(values)):
        raise TfnDomainError("from_observations needs finite samples")
    values = np.sort(values)
    lo, hi = float(values[0]), float(values[-1])
    mid = float(np.mean(values))
    # float mean of equal values can drift one ulp outside [min, max]
    return TFN(lo, min(max(mid, lo), hi), hi)
