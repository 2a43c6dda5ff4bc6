"""JSON helpers: rationals render as exact "p/q" strings, never floats."""
from __future__ import annotations

from fractions import Fraction
from typing import List

from .linalg import QMatrix


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise TypeError(f"expected exact rational encoding, got {type(s).__name__}")


def matrix_to_json(M: QMatrix) -> List[List[str]]:
    return [[frac_str(v) for v in row] for row in M.data]


def matrix_from_json(rows) -> QMatrix:
    return QMatrix([[parse_frac(v) for v in row] for row in rows])
