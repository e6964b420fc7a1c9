"""
Self-orthogonality of linear codes.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.core.exceptions import InvalidCodeError
from src.codes.linear_code import LinearCode, schur_product
from src.gf.field import codes
from src.linalg.matrix import Matrix, right_kernel, solve_linear


@dataclass
class OrthogonalityReport:
    """Gram matrix and the three orthogonality flags."""

    self_orthogonal: bool
    self_dual: bool
    almost_self_dual: bool
    gram: Matrix


def gram_matrix(C: LinearCode) -> Matrix:
    return C.generator @ C.generator.transpose()


def is_self_orthogonal(C: LinearCode) -> bool:
    """True iff G G^T = 0."""
    return gram_matrix(C).is_zero()


def orthogonality_report(C: LinearCode) -> OrthogonalityReport:
    gram = gram_matrix(C)
    orthogonal = gram.is_zero()
    N, k = C.length, C.dimension
    return OrthogonalityReport(
        self_orthogonal=orthogonal,
        self_dual=orthogonal and 2 * k == N,
        almost_self_dual=orthogonal and N % 2 == 1 and 2 * k == N - 1,
        gram=gram,
    )


def punctured_self_orthogonal_criterion(C: LinearCode, indices: Sequence[int], scale) -> bool:
    """
    Decide whether the scaled punctured code Phi_{1,v}(C_I) is self-orthogonal
    by looking for c in (C^2)^perp with Supp(c) = I and c_{i_j} = v_j^2.
    """
    ctx = C.ctx
    index_list = [int(i) for i in indices]
    factors = scale if isinstance(scale, ctx.GF) else ctx(scale)
    if len(index_list) != factors.size:
        raise InvalidCodeError("one scale factor per punctured coordinate is required")
    if np.any(factors == 0):
        raise InvalidCodeError("scale entries must be nonzero", {"scale": codes(factors).tolist()})

    target = ctx.GF.Zeros(C.length)
    target[index_list] = factors * factors
    square_dual = right_kernel(schur_product(C, C).generator)
    if square_dual.rows == 0:
        return False
    return solve_linear(square_dual.transpose(), target) is not None
