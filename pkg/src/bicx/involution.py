"""The eight real-linear ring automorphisms of the bicomplex numbers.

Six of them square to the identity (the conjugates ``dag0``..``dag5``); the
remaining two, ``pdag6`` and ``pdag7``, have order four.  Each map is fixed by
where it sends ``i1`` and ``i2``; :func:`enumerate_unit_homomorphisms`
recovers all eight by brute force over signed basis units.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Callable

from .core import (
    I1,
    I2,
    ONE,
    Bicomplex,
    Complex,
    IdempotentForm,
    J1,
    from_vec4,
    to_vec4,
)
from .linalg import Mat4


class ConjTag(enum.Enum):
    D0 = "dag0"
    D1 = "dag1"
    D2 = "dag2"
    D3 = "dag3"
    D4 = "dag4"
    D5 = "dag5"
    P6 = "pdag6"
    P7 = "pdag7"

    @property
    def index(self) -> int:
        return _TAG_ORDER.index(self)

    @property
    def symbol(self) -> str:
        return ("‡" if self.name.startswith("P") else "†") + self.name[1]

    @property
    def is_conjugate(self) -> bool:
        """True for the order-two maps and the identity."""
        return self.name.startswith("D")

    @classmethod
    def parse(cls, text: str) -> ConjTag:
        key = text.strip().lower()
        for tag in cls:
            if key in (tag.value, tag.name.lower(), tag.symbol):
                return tag
        raise ValueError(f"unknown conjugation {text!r}")

    def __str__(self) -> str:
        return self.value


_TAG_ORDER = list(ConjTag)
TAGS: tuple[ConjTag, ...] = tuple(ConjTag)


def _cartesian(tag: ConjTag, s: Bicomplex) -> Bicomplex:
    a, b = s.z1.re, s.z1.im
    c, d = s.z2.re, s.z2.im
    if tag is ConjTag.D0:
        return s
    if tag is ConjTag.D1:
        return Bicomplex(s.z1, -s.z2)
    if tag is ConjTag.D2:
        return Bicomplex(s.z1.conj(), s.z2.conj())
    if tag is ConjTag.D3:
        return Bicomplex(s.z1.conj(), -s.z2.conj())
    if tag is ConjTag.D4:
        # (Re z1 - Re z2 i1) + (-Im z1 + Im z2 i1) i2
        return Bicomplex(Complex(a, -c), Complex(-b, d))
    if tag is ConjTag.D5:
        return Bicomplex(Complex(a, c), Complex(b, d))
    if tag is ConjTag.P6:
        # Re z1 - Re z2 i1 + Im z1 i2 - Im z2 j1
        return Bicomplex(Complex(a, -c), Complex(b, -d))
    if tag is ConjTag.P7:
        return Bicomplex(Complex(a, c), Complex(-b, -d))
    raise ValueError(tag)


def apply(tag: ConjTag, s: Bicomplex) -> Bicomplex:
    """Image of ``s`` under the conjugation ``tag``."""
    return _cartesian(tag, s)


# (swap components, conjugate new first component, conjugate new second component)
_IDEMPOTENT_ACTION: dict[ConjTag, tuple[bool, bool, bool]] = {
    ConjTag.D0: (False, False, False),
    ConjTag.D1: (True, False, False),
    ConjTag.D2: (True, True, True),
    ConjTag.D3: (False, True, True),
    ConjTag.D4: (False, False, True),
    ConjTag.D5: (False, True, False),
    ConjTag.P6: (True, True, False),
    ConjTag.P7: (True, False, True),
}


def apply_idempotent(tag: ConjTag, f: IdempotentForm) -> IdempotentForm:
    swap, c1, c2 = _IDEMPOTENT_ACTION[tag]
    u, v = (f.ze2, f.ze1) if swap else (f.ze1, f.ze2)
    return IdempotentForm(u.conj() if c1 else u, v.conj() if c2 else v)


def as_matrix(tag: ConjTag) -> Mat4:
    """Matrix acting on ``to_vec4`` coordinates."""
    return Mat4.from_columns(to_vec4(apply(tag, b)) for b in BASIS)


def compose(*tags: ConjTag) -> Callable[[Bicomplex], Bicomplex]:
    """``compose(f, g)(s) == apply(f, apply(g, s))``."""

    def composite(s: Bicomplex) -> Bicomplex:
        for tag in reversed(tags):
            s = apply(tag, s)
        return s

    return composite


def iterate(tag: ConjTag, n: int, s: Bicomplex) -> Bicomplex:
    for _ in range(n):
        s = apply(tag, s)
    return s


def identify(fn: Callable[[Bicomplex], Bicomplex]) -> ConjTag | None:
    """The tag agreeing with ``fn`` on ``i1`` and ``i2``, if any."""
    images = (fn(I1), fn(I2))
    for tag in TAGS:
        if (apply(tag, I1), apply(tag, I2)) == images:
            return tag
    return None


def order(tag: ConjTag) -> int:
    """Least ``k >= 1`` such that applying ``tag`` k times is the identity."""
    k = 1
    while True:
        if all(iterate(tag, k, b) == b for b in BASIS):
            return k
        k += 1
        if k > 64:
            raise RuntimeError(f"{tag} has no finite order")


def classify_n_involutions(n: int) -> frozenset[ConjTag]:
    """Maps ``f`` among the eight with ``f**n`` equal to the identity."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return frozenset(tag for tag in TAGS if n % order(tag) == 0)


# -- brute-force enumeration -------------------------------------------------

BASIS: tuple[Bicomplex, ...] = (ONE, I1, I2, J1)
_BASIS_NAMES = ("1", "i1", "i2", "j1")


@dataclass(frozen=True, order=True)
class BasisUnit:
    """A signed basis unit such as ``-i2``."""

    sign: int
    name: str

    def __post_init__(self) -> None:
        if self.sign not in (1, -1) or self.name not in _BASIS_NAMES:
            raise ValueError(f"bad basis unit {self.sign}, {self.name}")

    @property
    def value(self) -> Bicomplex:
        return BASIS[_BASIS_NAMES.index(self.name)] * self.sign

    @classmethod
    def of(cls, s: Bicomplex) -> BasisUnit | None:
        for unit in SIGNED_UNITS:
            if unit.value == s:
                return unit
        return None

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.name


SIGNED_UNITS: tuple[BasisUnit, ...] = tuple(
    BasisUnit(sign, name) for name in _BASIS_NAMES for sign in (1, -1)
)


@dataclass(frozen=True, order=True)
class UnitAssignment:
    """Candidate images of ``i1`` and ``i2``."""

    f_i1: BasisUnit
    f_i2: BasisUnit

    def matrix(self) -> Mat4:
        """Linear extension with ``f(1) = 1`` and ``f(j1) = f(i1) f(i2)``."""
        images = (ONE, self.f_i1.value, self.f_i2.value, self.f_i1.value * self.f_i2.value)
        return Mat4.from_columns(to_vec4(x) for x in images)

    def extend(self, s: Bicomplex) -> Bicomplex:
        return from_vec4(self.matrix() @ to_vec4(s))

    def is_multiplicative(self) -> bool:
        m = self.matrix()
        f = lambda s: from_vec4(m @ to_vec4(s))  # noqa: E731
        return all(f(p * q) == f(p) * f(q) for p, q in itertools.product(BASIS, repeat=2))

    def is_valid(self) -> bool:
        return self.is_multiplicative() and self.matrix().det() != 0

    def tag(self) -> ConjTag | None:
        for tag in TAGS:
            if apply(tag, I1) == self.f_i1.value and apply(tag, I2) == self.f_i2.value:
                return tag
        return None

    def __str__(self) -> str:
        return f"i1 -> {self.f_i1}, i2 -> {self.f_i2}"


def candidate_assignments() -> list[UnitAssignment]:
    return [UnitAssignment(u, v) for u, v in itertools.product(SIGNED_UNITS, repeat=2)]


def enumerate_unit_homomorphisms() -> frozenset[UnitAssignment]:
    """All 64 candidates filtered to multiplicative, invertible extensions."""
    return frozenset(c for c in candidate_assignments() if c.is_valid())


def assignment_for(tag: ConjTag) -> UnitAssignment:
    return UnitAssignment(BasisUnit.of(apply(tag, I1)), BasisUnit.of(apply(tag, I2)))


def imaginary_permutation(tag: ConjTag) -> tuple[BasisUnit, ...]:
    """Images of ``(i1, -i1, i2, -i2)``; always a rearrangement of those four."""
    return tuple(BasisUnit.of(apply(tag, u.value)) for u in IMAGINARY_UNITS)


IMAGINARY_UNITS: tuple[BasisUnit, ...] = (
    BasisUnit(1, "i1"),
    BasisUnit(-1, "i1"),
    BasisUnit(1, "i2"),
    BasisUnit(-1, "i2"),
)


def permutation_order(perm: tuple[BasisUnit, ...]) -> int:
    """Order of a permutation of ``IMAGINARY_UNITS`` given as its image tuple."""
    index = {u: k for k, u in enumerate(IMAGINARY_UNITS)}
    mapping = [index[u] for u in perm]
    lengths = []
    seen: set[int] = set()
    for start in range(len(mapping)):
        if start in seen:
            continue
        n, k = 0, start
        while k not in seen:
            seen.add(k)
            k = mapping[k]
            n += 1
        lengths.append(n)
    return math.lcm(*lengths)


__all__ = [
    "ConjTag",
    "TAGS",
    "BASIS",
    "BasisUnit",
    "SIGNED_UNITS",
    "IMAGINARY_UNITS",
    "UnitAssignment",
    "apply",
    "apply_idempotent",
    "as_matrix",
    "compose",
    "iterate",
    "identify",
    "order",
    "classify_n_involutions",
    "candidate_assignments",
    "enumerate_unit_homomorphisms",
    "assignment_for",
    "imaginary_permutation",
    "permutation_order",
]
