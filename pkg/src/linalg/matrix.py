"""
Dense matrices over a FieldCtx.

Reduction goes through galois' row_reduce; kernels and solutions are read off
the reduced row echelon form with free variables set to zero.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import galois
import numpy as np

from src.core.exceptions import DimensionMismatchError
from src.gf.field import FieldCtx, codes


@dataclass(eq=False)
class Matrix:
    """Row-major matrix; all entries from one field."""

    ctx: FieldCtx
    data: galois.FieldArray

    def __post_init__(self):
        if not isinstance(self.data, self.ctx.GF):
            self.data = self.ctx(self.data)
        if self.data.ndim != 2:
            raise DimensionMismatchError(
                "matrix data must be two-dimensional", {"shape": list(self.data.shape)}
            )

    @classmethod
    def from_codes(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Matrix":
        array = np.asarray(rows, dtype=np.int64)
        if array.size == 0:
            array = np.zeros((len(rows), cols or 0), dtype=np.int64)
        return cls(ctx, ctx(array))

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "Matrix":
        return cls(ctx, ctx.GF.Zeros((rows, cols)))

    @classmethod
    def identity(cls, ctx: FieldCtx, size: int) -> "Matrix":
        return cls(ctx, ctx.GF.Identity(size))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    def codes(self) -> list[list[int]]:
        return codes(self.data).tolist()

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, self.data.T.copy())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self, other)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                "inner dimensions differ", {"left": [self.rows, self.cols], "right": [other.rows, other.cols]}
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.ctx, self.rows, other.cols)
        return Matrix(self.ctx, self.data @ other.data)

    def is_zero(self) -> bool:
        return not np.any(codes(self.data))


def _check_same_field(a: Matrix, b: Matrix) -> None:
    if a.ctx != b.ctx:
        raise DimensionMismatchError(
            "matrices over different fields", {"left": a.ctx.name, "right": b.ctx.name}
        )


def rref_rank(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    if M.rows == 0 or M.cols == 0:
        return Matrix(M.ctx, M.data.copy()), 0, []
    reduced = M.data.row_reduce()
    pivots = [int(np.argmax(row != 0)) for row in reduced if np.any(row)]
    return Matrix(M.ctx, reduced), len(pivots), pivots


def rank(M: Matrix) -> int:
    return rref_rank(M)[1]


def nonzero_rows(M: Matrix) -> Matrix:
    keep = [i for i, row in enumerate(codes(M.data)) if np.any(row)]
    return Matrix(M.ctx, M.data[keep, :] if keep else M.ctx.GF.Zeros((0, M.cols)))


def right_kernel(M: Matrix) -> Matrix:
    """Basis of {x : M x^T = 0}, one free variable per row."""
    ctx = M.ctx
    if M.rows == 0:
        return Matrix.identity(ctx, M.cols)
    reduced, _, pivots = rref_rank(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = ctx.GF.Zeros((len(free), M.cols))
    for row, column in enumerate(free):
        basis[row, column] = 1
        for i, pivot in enumerate(pivots):
            basis[row, pivot] = -reduced.data[i, column]
    return Matrix(ctx, basis)


def solve_linear(A: Matrix, b) -> Optional[galois.FieldArray]:
    """
    One solution of A x = b with free variables zero, or None if inconsistent.
    """
    ctx = A.ctx
    rhs = b if isinstance(b, ctx.GF) else ctx(b)
    rhs = rhs.reshape(-1)
    if rhs.size != A.rows:
        raise DimensionMismatchError(
            "right-hand side length differs from row count",
            {"rows": A.rows, "rhs": int(rhs.size)}
        )
    if A.rows == 0:
        return ctx.GF.Zeros(A.cols)
    augmented = Matrix(ctx, np.hstack([codes(A.data), codes(rhs).reshape(-1, 1)]))
    reduced, _, pivots = rref_rank(augmented)
    if A.cols in pivots:
        return None
    solution = ctx.GF.Zeros(A.cols)
    for i, pivot in enumerate(pivots):
        solution[pivot] = reduced.data[i, A.cols]
    return solution


def row_space_equal(A: Matrix, B: Matrix) -> bool:
    """True iff A and B span the same row space."""
    _check_same_field(A, B)
    if A.cols != B.cols:
        raise DimensionMismatchError("column counts differ", {"left": A.cols, "right": B.cols})
    left = nonzero_rows(rref_rank(A)[0])
    right = nonzero_rows(rref_rank(B)[0])
    return left.codes() == right.codes()


def vstack(ctx: FieldCtx, blocks: Sequence[galois.FieldArray], cols: int) -> Matrix:
    """Stack row blocks (1-d rows or 2-d blocks) into one matrix."""
    parts = [codes(block).reshape(-1, cols) for block in blocks]
    if not parts:
        return Matrix.zeros(ctx, 0, cols)
    return Matrix(ctx, ctx(np.vstack(parts)))
