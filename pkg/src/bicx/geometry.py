"""Reflections of R^4 and the conjugations as products of reflections.

Coordinates are ``(x1, x_i1, x_i2, x_j1)``.  Hyperplane reflections use the
Householder form ``v - 2 (v.a)/(a.a) a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import reference
from .core import Vec4
from .involution import ConjTag, as_matrix
from .linalg import Mat4


class ZeroNormal(ValueError):
    pass


class Axis(enum.Enum):
    I1 = 1
    I2 = 2
    J1 = 3

    @classmethod
    def parse(cls, text: str) -> Axis:
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown axis {text!r}") from None


@dataclass(frozen=True)
class Hyperplane:
    """``{v : v . normal == 0}``."""

    normal: Vec4

    def __post_init__(self) -> None:
        if self.normal.is_zero():
            raise ZeroNormal("hyperplane normal must be nonzero")

    def matrix(self) -> Mat4:
        a = tuple(self.normal)
        aa = self.normal.dot(self.normal)
        return Mat4(
            tuple(
                tuple(int(i == j) - 2 * a[i] * a[j] / aa for j in range(4))
                for i in range(4)
            )
        )


A4 = Hyperplane(Vec4(0, 1, 1, 0))
A5 = Hyperplane(Vec4(0, 1, -1, 0))


def reflect_axis(axis: Axis, v: Vec4) -> Vec4:
    coords = list(v)
    coords[axis.value] = -coords[axis.value]
    return Vec4(*coords)


def axis_matrix(axis: Axis) -> Mat4:
    return Mat4.diag(*(-1 if k == axis.value else 1 for k in range(4)))


def reflect_hyperplane(h: Hyperplane, v: Vec4) -> Vec4:
    a = h.normal
    k = 2 * v.dot(a) / a.dot(a)
    return v - a.scale(k)


def reflection_matrix(name: str) -> Mat4:
    """Matrix for ``"i1"``, ``"i2"``, ``"j1"``, ``"a4"`` or ``"a5"``."""
    if name == "a4":
        return A4.matrix()
    if name == "a5":
        return A5.matrix()
    return axis_matrix(Axis.parse(name))


def compose_reflections(names) -> Mat4:
    """``names = ("i2", "j1")`` gives the matrix of ``R_i2 o R_j1``."""
    out = Mat4.identity()
    for name in names:
        out = out @ reflection_matrix(name)
    return out


@dataclass(frozen=True)
class Factorization:
    tag: ConjTag
    reflections: tuple[str, ...]
    holds: bool

    def __str__(self) -> str:
        rhs = " o ".join(f"R_{r}" for r in self.reflections)
        return f"{self.tag} = {rhs}: {'ok' if self.holds else 'FAILED'}"


@dataclass
class FactorizationReport:
    entries: list[Factorization] = field(default_factory=list)

    @property
    def failures(self) -> list[Factorization]:
        return [f for f in self.entries if not f.holds]

    @property
    def ok(self) -> bool:
        return bool(self.entries) and not self.failures


def factorization_check(factorizations=None) -> FactorizationReport:
    """Compare each conjugation matrix with its product of reflections."""
    factorizations = reference.FACTORIZATIONS if factorizations is None else factorizations
    report = FactorizationReport()
    for label, names in factorizations:
        tag = ConjTag.parse(label)
        report.entries.append(
            Factorization(tag, tuple(names), as_matrix(tag) == compose_reflections(names))
        )
    return report


def apply_vector_form(form: tuple[int, ...], v: Vec4) -> Vec4:
    """Evaluate a signed coordinate pattern such as ``(1, -3, -2, 4)`` at ``v``.

    Entry ``k`` of the pattern names the (1-based) coordinate of ``v``
    placed in slot ``k``, with its sign.
    """
    coords = tuple(v)
    return Vec4(*(Fraction(1 if k > 0 else -1) * coords[abs(k) - 1] for k in form))


__all__ = [
    "Axis",
    "Hyperplane",
    "ZeroNormal",
    "A4",
    "A5",
    "reflect_axis",
    "axis_matrix",
    "reflect_hyperplane",
    "reflection_matrix",
    "compose_reflections",
    "Factorization",
    "FactorizationReport",
    "factorization_check",
    "apply_vector_form",
]
