"""Scalar coefficients: exact rationals or binary floats."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)


def as_scalar(x: object) -> Scalar:
    """Coerce ``x`` to a Scalar; ints and strings become Fractions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


def convert(x: Scalar, mode: str) -> Scalar:
    if mode == EXACT:
        if isinstance(x, float):
            return Fraction(x)
        return x
    if mode == FLOAT:
        return float(x)
    raise ValueError(f"unknown mode {mode!r}")


def is_exact(x: Scalar) -> bool:
    return isinstance(x, Fraction)


def is_finite(x: Scalar) -> bool:
    return is_exact(x) or math.isfinite(x)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return repr(x)
