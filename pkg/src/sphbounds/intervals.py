"""Rational interval arithmetic with exact endpoints.

Certification paths never round: every endpoint is a `Fraction`, so an
enclosure `J` with `J.hi <= 0` is a proof, not an estimate.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

Q = Fraction
Number = Union[int, Fraction]


class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *a):
        raise AttributeError("RationalInterval is immutable")

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def __eq__(self, other):
        return (isinstance(other, RationalInterval)
                and self.lo == other.lo and self.hi == other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other):
        other = _coerce(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c = (self.lo * other.lo, self.lo * other.hi,
             self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(c), max(c))

    __rmul__ = __mul__

    def power(self, k: int) -> "RationalInterval":
        """[lo,hi]^k with the even-power tightening at sign changes."""
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return RationalInterval(1, 1)
        if k % 2 == 1 or self.lo >= 0:
            return RationalInterval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            return RationalInterval(self.hi ** k, self.lo ** k)
        return RationalInterval(0, max(self.lo ** k, self.hi ** k))

    def intersect(self, other: "RationalInterval") -> "RationalInterval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return RationalInterval(lo, hi)

    def hull(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(min(self.lo, other.lo), max(self.hi, other.hi))


def _coerce(x) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval(Fraction(x))


def split_box(box, axis: int):
    """Bisect a box (tuple of RationalInterval) along `axis`."""
    iv = box[axis]
    mid = iv.mid
    left = tuple(RationalInterval(iv.lo, mid) if i == axis else b
                 for i, b in enumerate(box))
    right = tuple(RationalInterval(mid, iv.hi) if i == axis else b
                  for i, b in enumerate(box))
    return left, right


def widest_axis(box) -> int:
    return max(range(len(box)), key=lambda i: box[i].width)


def box_max_width(box) -> Fraction:
    return max(iv.width for iv in box)
