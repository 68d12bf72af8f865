"""Evolution algebras given by a structure matrix in a natural basis.

Column ``i`` of the structure matrix holds the coordinates of ``b_i * b_i``;
distinct basis elements multiply to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (DimensionMismatch, DuplicateLabel, FieldMismatch,
                     LabelCountMismatch, NotSquare)
from .fields import FieldDescriptor, FieldScalar, ScalarMatrix, determinant, rank


@dataclass(frozen=True)
class AlgebraElement:
    """Coordinates of an element in the natural basis."""

    coords: tuple[FieldScalar, ...]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch("elements of different dimension")
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __rmul__(self, c) -> "AlgebraElement":
        return AlgebraElement(tuple(c * a for a in self.coords))

    def __len__(self):
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class EvolutionAlgebra:
    field: FieldDescriptor
    matrix: ScalarMatrix
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def omega(self, k: int, i: int) -> FieldScalar:
        """Coefficient of ``b_k`` in ``b_i * b_i``."""
        return self.matrix[k, i]

    def element(self, coords: Sequence) -> AlgebraElement:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(tuple(FieldScalar(self.field, c) for c in coords))

    def basis(self, i: int) -> AlgebraElement:
        return self.element([int(k == i) for k in range(self.dim)])

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        return multiply(self, x, y)

    def is_regular(self) -> bool:
        return is_regular(self)

    def square_rank(self) -> int:
        return square_rank(self)


def new_algebra(field: FieldDescriptor, matrix, labels: Sequence[str] | None = None) -> EvolutionAlgebra:
    """Build an algebra from its structure matrix (``ScalarMatrix`` or nested rows)."""
    if not isinstance(matrix, ScalarMatrix):
        rows = [list(r) for r in matrix]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise NotSquare("ragged structure matrix")
        matrix = ScalarMatrix.from_rows(field, rows)
    if matrix.field != field:
        raise FieldMismatch(f"matrix over {matrix.field}, algebra over {field}")
    if not matrix.is_square:
        raise NotSquare(f"structure matrix is {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if labels is None:
        labels = tuple(f"b{i}" for i in range(n))
    else:
        labels = tuple(labels)
        if len(labels) != n:
            raise LabelCountMismatch(f"{len(labels)} labels for dimension {n}")
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateLabel(lab)
            seen.add(lab)
    return EvolutionAlgebra(field, matrix, labels)


def multiply(X: EvolutionAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """(xy)_k = sum_i x_i y_i omega_ki."""
    n = X.dim
    if len(x.coords) != n or len(y.coords) != n:
        raise DimensionMismatch(f"elements must have {n} coordinates")
    out = [X.field.zero] * n
    for i in range(n):
        c = x.coords[i] * y.coords[i]
        if not c:
            continue
        col = X.matrix.column(i)
        for k in range(n):
            if col[k]:
                out[k] = out[k] + c * col[k]
    return AlgebraElement(tuple(out))


def is_regular(X: EvolutionAlgebra) -> bool:
    return bool(determinant(X.matrix))


def square_rank(X: EvolutionAlgebra) -> int:
    """Dimension of the span of all products."""
    return rank(X.matrix)
