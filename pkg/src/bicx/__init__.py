"""Exact bicomplex arithmetic and the classification of its conjugations."""

from .core import (
    E1,
    E2,
    I1,
    I2,
    J1,
    ONE,
    ZERO,
    Bicomplex,
    Complex,
    IdempotentForm,
    NonInvertible,
    NotRepresentable,
    Vec4,
    from_idempotent,
    from_vec4,
    inverse_idempotent,
    is_invertible,
    is_zero_divisor,
    mul,
    square_roots,
    to_idempotent,
    to_vec4,
)
from .involution import ConjTag, apply, apply_idempotent, as_matrix, classify_n_involutions, order
from .invert import ConjugateProductKind, conjugate_product, inverse_via_conjugates

__version__ = "0.1.0"

__all__ = [
    "E1",
    "E2",
    "I1",
    "I2",
    "J1",
    "ONE",
    "ZERO",
    "Bicomplex",
    "Complex",
    "IdempotentForm",
    "NonInvertible",
    "NotRepresentable",
    "Vec4",
    "from_idempotent",
    "from_vec4",
    "inverse_idempotent",
    "is_invertible",
    "is_zero_divisor",
    "mul",
    "square_roots",
    "to_idempotent",
    "to_vec4",
    "ConjTag",
    "apply",
    "apply_idempotent",
    "as_matrix",
    "classify_n_involutions",
    "order",
    "ConjugateProductKind",
    "conjugate_product",
    "inverse_via_conjugates",
]
