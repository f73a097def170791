"""Dense linear algebra over one finite field.

Matrices are 2-D galois ``FieldArray`` values; ``@``, ``.T`` and ``np.concatenate`` are the
numpy operations galois overrides for field arithmetic. This module adds the pieces the code
layer needs on top: empty-shape handling, a kernel basis read off the reduced echelon form,
particular solutions of linear systems, Vandermonde builders and the text format.
"""

from collections.abc import Sequence

import numpy as np

from etgrs import EtgrsError
from etgrs.algebra.field import FieldArray, FieldSpec, same_field


class MatrixShapeError(EtgrsError):
    """Exception raised for out-of-range indices and incompatible dimensions."""


class InconsistentSystemError(EtgrsError):
    """Exception raised when a linear system has no solution."""


def as_matrix(spec: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> FieldArray:
    """Build a matrix from integer encodings. ``cols`` fixes the width of an empty matrix."""
    if len(rows) == 0:
        return spec.gf.Zeros((0, cols or 0))
    return spec([list(row) for row in rows])


def _require_2d(matrix: FieldArray) -> None:
    if matrix.ndim != 2:  # noqa: PLR2004
        msg = f"expected a 2-D matrix, got shape {matrix.shape}"
        raise MatrixShapeError(msg)


def rank(matrix: FieldArray) -> int:
    _require_2d(matrix)
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def det(matrix: FieldArray) -> FieldArray:
    _require_2d(matrix)
    rows, cols = matrix.shape
    if rows != cols:
        msg = f"determinant needs a square matrix, got {rows}x{cols}"
        raise MatrixShapeError(msg)
    if rows == 0:
        return type(matrix)(1)
    return np.linalg.det(matrix)


def rref(matrix: FieldArray) -> FieldArray:
    """Reduced row echelon form, pivoting on the first nonzero entry of each column top-down."""
    _require_2d(matrix)
    if matrix.size == 0:
        return matrix.copy()
    return matrix.row_reduce()


def pivot_columns(reduced: FieldArray) -> list[int]:
    pivots = []
    for row in reduced:
        nonzero = np.flatnonzero(row.view(np.ndarray))
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return pivots


def kernel(matrix: FieldArray) -> FieldArray:
    """
    Basis of the right null space ``{x : M x^T = 0}``, one vector per row.

    The basis vector for free column ``f`` has a 1 at ``f``, zeros at the other free columns and
    ``-R[r, f]`` at pivot column ``r`` of the reduced form ``R``; rows follow free-column order.
    """
    _require_2d(matrix)
    gf = type(matrix)
    cols = matrix.shape[1]
    reduced = rref(matrix) if matrix.shape[0] else matrix
    pivots = pivot_columns(reduced)
    free = [c for c in range(cols) if c not in pivots]
    basis = gf.Zeros((len(free), cols))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = -reduced[r, f]
    return basis


def solve(matrix: FieldArray, rhs: FieldArray) -> FieldArray:
    """
    Return one solution ``x`` of ``M x^T = b``, taking every free variable as zero.

    Raises
    ------
        InconsistentSystemError: If ``b`` is not in the column space of ``M``.
    """
    _require_2d(matrix)
    same_field(matrix, rhs)
    rows, cols = matrix.shape
    if rhs.shape != (rows,):
        msg = f"right-hand side of length {rhs.shape} does not match {rows} equations"
        raise MatrixShapeError(msg)
    augmented = rref(np.concatenate((matrix, rhs.reshape(rows, 1)), axis=1))
    pivots = pivot_columns(augmented)
    if cols in pivots:
        msg = "linear system is inconsistent"
        raise InconsistentSystemError(msg)
    solution = type(matrix).Zeros(cols)
    for r, pc in enumerate(pivots):
        solution[pc] = augmented[r, cols]
    return solution


def vandermonde(alpha: FieldArray, rows: int) -> FieldArray:
    """Matrix with entry ``(i, j) = alpha_j ** i`` for ``i < rows``; the row of ones comes first."""
    if rows < 1:
        msg = f"a Vandermonde matrix needs at least one row, got {rows}"
        raise MatrixShapeError(msg)
    gf = type(alpha)
    return np.vstack([gf.Ones(len(alpha)), *(alpha**i for i in range(1, rows))])


def vandermonde_product(alpha: FieldArray) -> FieldArray:
    """The product of ``alpha_j - alpha_i`` over ``i < j``, equal to ``det(vandermonde(alpha, m))``."""
    gf = type(alpha)
    product = gf(1)
    for j in range(len(alpha)):
        for i in range(j):
            product = product * (alpha[j] - alpha[i])
    return product


def select(
    matrix: FieldArray, row_indices: Sequence[int] | None, col_indices: Sequence[int] | None
) -> FieldArray:
    """Submatrix in the given index order; ``None`` keeps every row or column."""
    _require_2d(matrix)
    rows = list(range(matrix.shape[0])) if row_indices is None else list(row_indices)
    cols = list(range(matrix.shape[1])) if col_indices is None else list(col_indices)
    for name, indices, bound in (("row", rows, matrix.shape[0]), ("column", cols, matrix.shape[1])):
        if any(not 0 <= i < bound for i in indices):
            msg = f"{name} index out of range 0..{bound - 1}: {indices}"
            raise MatrixShapeError(msg)
    return matrix[np.ix_(rows, cols)]


def hconcat(left: FieldArray, right: FieldArray) -> FieldArray:
    same_field(left, right)
    if left.shape[0] != right.shape[0]:
        msg = f"cannot place {left.shape} beside {right.shape}"
        raise MatrixShapeError(msg)
    return np.concatenate((left, right), axis=1)


def vconcat(top: FieldArray, bottom: FieldArray) -> FieldArray:
    same_field(top, bottom)
    if top.shape[1] != bottom.shape[1]:
        msg = f"cannot stack {top.shape} on {bottom.shape}"
        raise MatrixShapeError(msg)
    return np.concatenate((top, bottom), axis=0)


def scale_cols(matrix: FieldArray, weights: FieldArray) -> FieldArray:
    same_field(matrix, weights)
    if weights.shape != (matrix.shape[1],):
        msg = f"{weights.shape[0]} weights for {matrix.shape[1]} columns"
        raise MatrixShapeError(msg)
    return matrix * weights[np.newaxis, :]


def same_row_space(a: FieldArray, b: FieldArray) -> bool:
    if a.shape[1] != b.shape[1]:
        return False
    ra, rb = rref(a), rref(b)
    ka, kb = rank(a), rank(b)
    return ka == kb and np.array_equal(ra[:ka].view(np.ndarray), rb[:kb].view(np.ndarray))


def format_matrix(matrix: FieldArray) -> str:
    """One row per line, integer encodings separated by single spaces. Vectors print as one line."""
    raw = np.atleast_2d(matrix.view(np.ndarray))
    return "\n".join(" ".join(str(int(x)) for x in row) for row in raw)
