"""Bicomplex arithmetic.

A bicomplex number is ``z1 + z2*i2`` with ``z1, z2`` complex over ``i1``.
Coefficients are exact :class:`fractions.Fraction` values or floats; every
value type here is an immutable dataclass.

The idempotent basis is ``e1 = (1 + j1)/2``, ``e2 = (1 - j1)/2`` where
``j1 = i1*i2``.  In that basis a number is ``ze1*e1 + ze2*e2`` with
``ze1 = z1 - z2*i1`` and ``ze2 = z1 + z2*i1``, and multiplication acts
componentwise.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .scalar import Scalar, as_scalar, convert, format_scalar, is_exact, rational_sqrt

__all__ = [
    "Complex",
    "Bicomplex",
    "Vec4",
    "IdempotentForm",
    "NonInvertible",
    "NotRepresentable",
    "mul",
    "to_idempotent",
    "from_idempotent",
    "to_vec4",
    "from_vec4",
    "is_invertible",
    "is_zero_divisor",
    "inverse_idempotent",
    "square_roots",
    "complex_square_roots",
    "ZERO",
    "ONE",
    "I1",
    "I2",
    "J1",
    "E1",
    "E2",
]


class NonInvertible(ArithmeticError):
    """Raised for zero and for zero divisors."""


class NotRepresentable(ArithmeticError):
    """Raised when an exact result would leave the rationals."""


def _half(x: Scalar) -> Scalar:
    return x / 2


@dataclass(frozen=True)
class Complex:
    """``re + im*i1``."""

    re: Scalar
    im: Scalar = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", as_scalar(self.re))
        object.__setattr__(self, "im", as_scalar(self.im))

    def __add__(self, other: Complex) -> Complex:
        return Complex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: Complex) -> Complex:
        return Complex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> Complex:
        return Complex(-self.re, -self.im)

    def __mul__(self, other: Complex | int | Fraction | float) -> Complex:
        if isinstance(other, Complex):
            return Complex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction, float)):
            return Complex(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> Complex:
        return Complex(self.re, -self.im)

    def abs2(self) -> Scalar:
        """Modulus squared, ``z * conj(z)``."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def reciprocal(self) -> Complex:
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("complex zero has no reciprocal")
        return Complex(self.re / n, -self.im / n)

    def times_i1(self) -> Complex:
        return Complex(-self.im, self.re)

    def to_mode(self, mode: str) -> Complex:
        return Complex(convert(self.re, mode), convert(self.im, mode))

    def __str__(self) -> str:
        return _format_terms([(self.re, ""), (self.im, "i1")])


@dataclass(frozen=True)
class Vec4:
    """Real coordinates ``(x1, x_i1, x_i2, x_j1)``."""

    x1: Scalar
    xi1: Scalar
    xi2: Scalar
    xj1: Scalar

    def __post_init__(self) -> None:
        for name in ("x1", "xi1", "xi2", "xj1"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.x1, self.xi1, self.xi2, self.xj1))

    def __getitem__(self, k: int) -> Scalar:
        return tuple(self)[k]

    def __add__(self, other: Vec4) -> Vec4:
        return Vec4(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: Vec4) -> Vec4:
        return Vec4(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> Vec4:
        return Vec4(*(-a for a in self))

    def scale(self, k: Scalar) -> Vec4:
        return Vec4(*(k * a for a in self))

    def dot(self, other: Vec4) -> Scalar:
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)


@dataclass(frozen=True)
class Bicomplex:
    """``z1 + z2*i2``; supports ``+ - *`` and integer powers."""

    z1: Complex
    z2: Complex = Complex(0)

    @classmethod
    def from_parts(cls, x1=0, xi1=0, xi2=0, xj1=0) -> Bicomplex:
        """Build from the four real coordinates."""
        return cls(Complex(x1, xi1), Complex(xi2, xj1))

    @classmethod
    def scalar(cls, x) -> Bicomplex:
        return cls(Complex(x))

    def __add__(self, other: Bicomplex) -> Bicomplex:
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: Bicomplex) -> Bicomplex:
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __neg__(self) -> Bicomplex:
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other) -> Bicomplex:
        if isinstance(other, Bicomplex):
            return mul(self, other)
        if isinstance(other, (int, Fraction, float)):
            return Bicomplex(self.z1 * other, self.z2 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Bicomplex:
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base, n = inverse_idempotent(self), -n
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.z1.is_zero() and self.z2.is_zero()

    def is_real(self) -> bool:
        """True when the i1, i2 and j1 parts vanish."""
        return self.z1.im == 0 and self.z2.is_zero()

    @property
    def real(self) -> Scalar:
        return self.z1.re

    def to_mode(self, mode: str) -> Bicomplex:
        return Bicomplex(self.z1.to_mode(mode), self.z2.to_mode(mode))

    def __str__(self) -> str:
        return _format_terms(
            [(self.z1.re, ""), (self.z1.im, "i1"), (self.z2.re, "i2"), (self.z2.im, "j1")]
        )


@dataclass(frozen=True)
class IdempotentForm:
    """``ze1*e1 + ze2*e2``."""

    ze1: Complex
    ze2: Complex

    def __mul__(self, other: IdempotentForm) -> IdempotentForm:
        return IdempotentForm(self.ze1 * other.ze1, self.ze2 * other.ze2)

    def __str__(self) -> str:
        return f"({self.ze1})*e1 + ({self.ze2})*e2"


def _format_terms(terms: list[tuple[Scalar, str]]) -> str:
    out: list[str] = []
    for coeff, unit in terms:
        if coeff == 0:
            continue
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if unit and mag == 1:
            body = unit
        elif unit:
            body = f"{format_scalar(mag)}*{unit}"
        else:
            body = format_scalar(mag)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out) if out else "0"


def mul(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    """``(z1 w1 - z2 w2) + (z1 w2 + z2 w1) i2``."""
    z1, z2, w1, w2 = s.z1, s.z2, t.z1, t.z2
    return Bicomplex(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)


def to_idempotent(s: Bicomplex) -> IdempotentForm:
    z2i = s.z2.times_i1()
    return IdempotentForm(s.z1 - z2i, s.z1 + z2i)


def from_idempotent(f: IdempotentForm) -> Bicomplex:
    # z1 = (ze1 + ze2)/2, z2 = -i1 (ze2 - ze1)/2
    total = f.ze1 + f.ze2
    diff = f.ze2 - f.ze1
    z1 = Complex(_half(total.re), _half(total.im))
    z2 = Complex(_half(diff.im), _half(-diff.re))
    return Bicomplex(z1, z2)


def to_vec4(s: Bicomplex) -> Vec4:
    return Vec4(s.z1.re, s.z1.im, s.z2.re, s.z2.im)


def from_vec4(v: Vec4) -> Bicomplex:
    return Bicomplex(Complex(v.x1, v.xi1), Complex(v.xi2, v.xj1))


def is_invertible(s: Bicomplex) -> bool:
    f = to_idempotent(s)
    return not (f.ze1.is_zero() or f.ze2.is_zero())


def is_zero_divisor(s: Bicomplex) -> bool:
    return not s.is_zero() and not is_invertible(s)


def inverse_idempotent(s: Bicomplex) -> Bicomplex:
    f = to_idempotent(s)
    if f.ze1.is_zero() or f.ze2.is_zero():
        raise NonInvertible(f"{s} is zero or a zero divisor")
    return from_idempotent(IdempotentForm(f.ze1.reciprocal(), f.ze2.reciprocal()))


def complex_square_roots(w: Complex) -> list[Complex]:
    """All square roots of ``w``: ``[0]`` for zero, otherwise ``[r, -r]``.

    Exact inputs must have rational roots; floats use :mod:`cmath`.
    """
    if w.is_zero():
        return [w]
    if is_exact(w.re) and is_exact(w.im):
        modulus = rational_sqrt(w.abs2())
        if modulus is None:
            raise NotRepresentable(f"|{w}| is irrational")
        x = rational_sqrt((modulus + w.re) / 2)
        y = rational_sqrt((modulus - w.re) / 2)
        if x is None or y is None:
            raise NotRepresentable(f"sqrt({w}) is irrational")
        if w.im < 0:
            y = -y
        r = Complex(x, y)
    else:
        c = cmath.sqrt(complex(float(w.re), float(w.im)))
        r = Complex(c.real, c.imag)
    return [r, -r]


def square_roots(t: Bicomplex) -> frozenset[Bicomplex]:
    """Every bicomplex ``s`` with ``s*s == t``.

    Roots are taken in each idempotent component and combined with all sign
    choices, so an invertible ``t`` has four roots and a zero divisor two.
    """
    f = to_idempotent(t)
    return frozenset(
        from_idempotent(IdempotentForm(r1, r2))
        for r1, r2 in itertools.product(complex_square_roots(f.ze1), complex_square_roots(f.ze2))
    )


ZERO = Bicomplex.from_parts(0)
ONE = Bicomplex.from_parts(1)
I1 = Bicomplex.from_parts(0, 1)
I2 = Bicomplex.from_parts(0, 0, 1)
J1 = Bicomplex.from_parts(0, 0, 0, 1)
E1 = Bicomplex.from_parts(Fraction(1, 2), 0, 0, Fraction(1, 2))
E2 = Bicomplex.from_parts(Fraction(1, 2), 0, 0, Fraction(-1, 2))
