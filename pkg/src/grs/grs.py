"""
GRS and extended GRS codes.

GRS_{k,n}(alpha, v) = {(v_1 f(alpha_1), ..., v_n f(alpha_n)) : deg f < k}; the
extended code appends the coefficient f_{k-1} as the last coordinate.
"""
from dataclasses import dataclass

import galois
import numpy as np

from src.core.exceptions import InvalidSpecError
from src.codes.linear_code import LinearCode, monomial_transform
from src.gf.field import FieldCtx, codes, powers_matrix
from src.linalg.matrix import Matrix


def as_vector(ctx: FieldCtx, values) -> galois.FieldArray:
    if isinstance(values, ctx.GF):
        return values.reshape(-1)
    return ctx(values).reshape(-1)


def check_points(alpha: galois.FieldArray) -> None:
    points = codes(alpha).tolist()
    if len(set(points)) != len(points):
        raise InvalidSpecError("evaluation points must be pairwise distinct", {"alpha": points})


def check_multipliers(v: galois.FieldArray, n: int) -> None:
    if v.size != n:
        raise InvalidSpecError("one column multiplier per evaluation point is required", {"n": n, "v": int(v.size)})
    if np.any(v == 0):
        raise InvalidSpecError("column multipliers must be nonzero", {"v": codes(v).tolist()})


@dataclass(eq=False)
class GrsSpec:
    """Parameters of GRS_{k,n}(alpha, v) or its extension."""

    ctx: FieldCtx
    alpha: galois.FieldArray
    v: galois.FieldArray
    k: int
    extended: bool = False

    def __post_init__(self):
        self.alpha = as_vector(self.ctx, self.alpha)
        self.v = as_vector(self.ctx, self.v)
        check_points(self.alpha)
        check_multipliers(self.v, self.n)
        # 1 <= k <= n so that every closed-form dual is itself a GrsSpec
        if not 1 <= self.k <= self.n:
            raise InvalidSpecError("dimension must satisfy 1 <= k <= n", {"k": self.k, "n": self.n})

    @property
    def n(self) -> int:
        return int(self.alpha.size)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.ctx.p, "m": self.ctx.m, "modulus": list(self.ctx.modulus)},
            "alpha": codes(self.alpha).tolist(),
            "v": codes(self.v).tolist(),
            "k": self.k,
            "extended": self.extended,
        }


def u_vector(alpha: galois.FieldArray) -> galois.FieldArray:
    """u_j = -prod_{i != j} (alpha_j - alpha_i)^{-1}."""
    check_points(alpha)
    n = int(alpha.size)
    if n < 2:
        raise InvalidSpecError("u-vector needs at least two points", {"n": n})
    differences = alpha[:, np.newaxis] - alpha[np.newaxis, :]
    differences[np.arange(n), np.arange(n)] = 1
    return -(np.multiply.reduce(differences, axis=1) ** -1)


def grs_generator(spec: GrsSpec) -> LinearCode:
    """Rows v * alpha^i for i < k; the extension column is e_k."""
    ctx = spec.ctx
    rows = powers_matrix(spec.alpha, spec.k) * spec.v
    if spec.extended:
        column = ctx.GF.Zeros((spec.k, 1))
        column[spec.k - 1, 0] = 1
        rows = ctx(np.hstack([codes(rows), codes(column)]))
    return LinearCode(ctx, Matrix(ctx, rows))


def grs_dual(spec: GrsSpec) -> LinearCode:
    """
    Closed-form dual: GRS_{n-k,n}(alpha, u) for the plain code and
    GRS_{n+1-k,n}(alpha, u, infinity) for the extended one, then rescaled by v^{-1}.
    """
    ctx = spec.ctx
    n = spec.n
    u = u_vector(spec.alpha)
    inverse = spec.v ** -1
    if spec.extended:
        base = grs_generator(GrsSpec(ctx, spec.alpha, u, n + 1 - spec.k, extended=True))
        scale = ctx(np.append(codes(inverse), 1))
    else:
        if spec.k == n:
            return LinearCode.zero_code(ctx, n)
        base = grs_generator(GrsSpec(ctx, spec.alpha, u, n - spec.k))
        scale = inverse
    return monomial_transform(base, list(range(spec.length)), scale)
