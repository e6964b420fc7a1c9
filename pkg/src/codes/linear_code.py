"""
Linear codes given by a full-row-rank generator matrix.

Code equality is row-space equality. Coordinates are 0-based throughout.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.core.exceptions import DimensionMismatchError, InvalidCodeError
from src.gf.field import FieldCtx, codes
from src.linalg.matrix import Matrix, nonzero_rows, rref_rank, right_kernel, row_space_equal


@dataclass(eq=False)
class LinearCode:
    """[N, k] code over ctx; generator rows are linearly independent."""

    ctx: FieldCtx
    generator: Matrix

    def __post_init__(self):
        _, rank, _ = rref_rank(self.generator)
        if rank != self.generator.rows:
            raise InvalidCodeError(
                "generator matrix must have full row rank",
                {"rows": self.generator.rows, "rank": rank}
            )

    @classmethod
    def span(cls, ctx: FieldCtx, rows: Matrix) -> "LinearCode":
        """Code spanned by arbitrary rows (dependent rows allowed)."""
        reduced, _, _ = rref_rank(rows)
        return cls(ctx, nonzero_rows(reduced))

    @classmethod
    def full_space(cls, ctx: FieldCtx, length: int) -> "LinearCode":
        return cls(ctx, Matrix.identity(ctx, length))

    @classmethod
    def zero_code(cls, ctx: FieldCtx, length: int) -> "LinearCode":
        return cls(ctx, Matrix.zeros(ctx, 0, length))

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return self.generator.rows

    def canonical(self) -> Matrix:
        """Reduced row echelon generator."""
        return rref_rank(self.generator)[0]

    def same_code(self, other: "LinearCode") -> bool:
        return row_space_equal(self.generator, other.generator)

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.ctx.p, "m": self.ctx.m, "modulus": list(self.ctx.modulus)},
            "length": self.length,
            "dimension": self.dimension,
            "generator": self.generator.codes(),
        }


def dual_code(C: LinearCode) -> LinearCode:
    """C^perp under the standard inner product."""
    return LinearCode(C.ctx, right_kernel(C.generator))


def puncture(C: LinearCode, indices: Sequence[int]) -> LinearCode:
    """Restriction of C to the sorted distinct 0-based coordinates in indices."""
    index_list = [int(i) for i in indices]
    if not index_list:
        raise InvalidCodeError("puncture set must be nonempty")
    if any(i < 0 or i >= C.length for i in index_list):
        raise InvalidCodeError(
            "puncture index out of range", {"indices": index_list, "length": C.length}
        )
    if any(b <= a for a, b in zip(index_list, index_list[1:])):
        raise InvalidCodeError(
            "puncture indices must be sorted and distinct", {"indices": index_list}
        )
    return LinearCode.span(C.ctx, Matrix(C.ctx, C.generator.data[:, index_list]))


def monomial_transform(C: LinearCode, perm: Sequence[int], scale) -> LinearCode:
    """
    Apply c -> (v_1 c_{pi(1)}, ..., v_N c_{pi(N)}) to every codeword.
    """
    ctx = C.ctx
    perm_list = [int(i) for i in perm]
    if sorted(perm_list) != list(range(C.length)):
        raise InvalidCodeError("perm is not a permutation of the coordinates", {"perm": perm_list})
    factors = scale if isinstance(scale, ctx.GF) else ctx(scale)
    if factors.size != C.length:
        raise InvalidCodeError("scale length differs from code length", {"length": C.length})
    if np.any(factors == 0):
        raise InvalidCodeError("scale entries must be nonzero", {"scale": codes(factors).tolist()})
    if C.dimension == 0:
        return LinearCode.zero_code(ctx, C.length)
    mapped = C.generator.data[:, perm_list] * factors
    return LinearCode(ctx, Matrix(ctx, mapped))


def schur_product(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """Span of all coordinatewise products of generator rows."""
    if C1.ctx != C2.ctx or C1.length != C2.length:
        raise DimensionMismatchError(
            "Schur product needs codes of equal length over one field",
            {"lengths": [C1.length, C2.length], "fields": [C1.ctx.name, C2.ctx.name]}
        )
    ctx = C1.ctx
    if C1.dimension == 0 or C2.dimension == 0:
        return LinearCode.zero_code(ctx, C1.length)
    g1, g2 = C1.generator.data, C2.generator.data
    products = (g1[:, np.newaxis, :] * g2[np.newaxis, :, :]).reshape(-1, C1.length)
    return LinearCode.span(ctx, Matrix(ctx, products))


def schur_square(C: LinearCode) -> LinearCode:
    return schur_product(C, C)
