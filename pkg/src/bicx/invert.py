"""Inverses from products of conjugates.

Multiplying ``s`` by its images under the members of a subgroup of
conjugations gives ``|ze1|^2 |ze2|^2`` for ``SUB123`` and ``SUB367`` and the
square of that for ``FULL``; these are real, and nonzero exactly when ``s``
is invertible.

``SUB345`` behaves differently.  None of its maps swaps the idempotent
components, so its product is ``|ze1|^4 e1 + |ze2|^4 e2``.  That is real
only when ``|ze1| == |ze2|``, and it is nonzero for zero divisors such as
``e1``.  The quotient formula for ``s**-1`` still holds for it, as a
bicomplex quotient.
"""

from __future__ import annotations

import enum
from functools import reduce

from .core import ONE, Bicomplex, NonInvertible, inverse_idempotent, is_invertible, to_idempotent
from .involution import ConjTag, apply
from .scalar import Scalar


class ConjugateProductKind(enum.Enum):
    FULL = tuple(ConjTag)
    SUB123 = (ConjTag.D0, ConjTag.D1, ConjTag.D2, ConjTag.D3)
    SUB345 = (ConjTag.D0, ConjTag.D3, ConjTag.D4, ConjTag.D5)
    SUB367 = (ConjTag.D0, ConjTag.D3, ConjTag.P6, ConjTag.P7)

    @property
    def tags(self) -> tuple[ConjTag, ...]:
        return self.value

    @property
    def exponent(self) -> int:
        """Power ``m`` in ``|ze1|^m |ze2|^m``."""
        return 4 if self is ConjugateProductKind.FULL else 2

    @classmethod
    def parse(cls, text: str) -> ConjugateProductKind:
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown conjugate-product kind {text!r}") from None


KINDS = tuple(ConjugateProductKind)


def _product(values) -> Bicomplex:
    return reduce(lambda x, y: x * y, values, ONE)


def conjugate_product(s: Bicomplex, kind: ConjugateProductKind) -> Bicomplex:
    return _product(apply(tag, s) for tag in kind.tags)


def modulus_product(s: Bicomplex, kind: ConjugateProductKind) -> Scalar:
    """``|ze1|^m |ze2|^m`` with ``m = kind.exponent``.

    ``|z|^2`` is ``z * conj(z)`` and ``|z|^4`` its square; no roots are taken.
    Equal to :func:`conjugate_product` for every kind except ``SUB345``.
    """
    f = to_idempotent(s)
    base = f.ze1.abs2() * f.ze2.abs2()
    return base ** (kind.exponent // 2)


def invertibility_conditions(s: Bicomplex) -> dict[ConjugateProductKind, bool]:
    """Whether each conjugate product of ``s`` is nonzero."""
    return {kind: not conjugate_product(s, kind).is_zero() for kind in KINDS}


def inverse_via_conjugates(s: Bicomplex, kind: ConjugateProductKind) -> Bicomplex:
    """``s**-1`` as (product of the non-identity images) / (full product).

    A real denominator is divided out as a rational scalar.  The hyperbolic
    denominator of ``SUB345`` is inverted componentwise.
    """
    denom = conjugate_product(s, kind)
    if not is_invertible(denom):
        raise NonInvertible(f"{s} is zero or a zero divisor")
    numer = _product(apply(tag, s) for tag in kind.tags if tag is not ConjTag.D0)
    if denom.is_real():
        return numer * (1 / denom.real)
    return numer * inverse_idempotent(denom)


__all__ = [
    "ConjugateProductKind",
    "KINDS",
    "conjugate_product",
    "modulus_product",
    "invertibility_conditions",
    "inverse_via_conjugates",
]
