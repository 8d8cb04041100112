"""Exact 4x4 matrices over the scalar ring."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Vec4
from .scalar import Scalar, as_scalar


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Mat4:
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_scalar(x) for x in row) for row in self.rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Mat4 needs 4 rows of 4 entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> Mat4:
        return cls(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))

    @classmethod
    def diag(cls, *d) -> Mat4:
        return cls(tuple(tuple(d[i] if i == j else 0 for j in range(4)) for i in range(4)))

    @classmethod
    def from_columns(cls, cols) -> Mat4:
        cols = [tuple(c) for c in cols]
        return cls(tuple(tuple(cols[j][i] for j in range(4)) for i in range(4)))

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Mat4):
            return Mat4(
                tuple(
                    tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(4)), Fraction(0)) for j in range(4))
                    for i in range(4)
                )
            )
        if isinstance(other, Vec4):
            return Vec4(*(sum((a * b for a, b in zip(row, other)), Fraction(0)) for row in self.rows))
        return NotImplemented

    def __pow__(self, n: int) -> Mat4:
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        out = Mat4.identity()
        for _ in range(n):
            out = out @ self
        return out

    def det(self) -> Scalar:
        total: Scalar = Fraction(0)
        for p in itertools.permutations(range(4)):
            term: Scalar = Fraction(_perm_sign(p))
            for i in range(4):
                term = term * self.rows[i][p[i]]
            total += term
        return total

    def is_signed_permutation(self) -> bool:
        for line in list(self.rows) + [self.column(j) for j in range(4)]:
            nonzero = [x for x in line if x != 0]
            if len(nonzero) != 1 or nonzero[0] not in (1, -1):
                return False
        return True

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{str(x):>4}" for x in row) for row in self.rows)
