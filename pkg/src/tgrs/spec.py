"""
CodeSpec for (+)-TGRS and (+)-ETGRS codes and the generator matrix G_k.

Rows v*alpha^i (i = 0..k-2) and v*(alpha^{k-1} + eta*alpha^k); the extended
code appends the column e_k carrying the coefficient of x^{k-1}.
"""
from dataclasses import dataclass, replace

import galois
import numpy as np

from src.core.exceptions import InvalidSpecError
from src.codes.linear_code import LinearCode
from src.gf.field import FieldCtx, FieldElem, codes, powers_matrix
from src.grs.grs import as_vector, check_multipliers, check_points
from src.linalg.matrix import Matrix


@dataclass(eq=False)
class CodeSpec:
    """C_{k,n}(alpha, v, eta) or, when extended, C_{k,n}(alpha, v, eta, infinity)."""

    ctx: FieldCtx
    alpha: galois.FieldArray
    v: galois.FieldArray
    eta: FieldElem
    k: int
    extended: bool = True

    def __post_init__(self):
        self.alpha = as_vector(self.ctx, self.alpha)
        self.v = as_vector(self.ctx, self.v)
        if not isinstance(self.eta, self.ctx.GF):
            self.eta = self.ctx(int(self.eta))
        check_points(self.alpha)
        check_multipliers(self.v, self.n)
        if int(self.eta) == 0:
            raise InvalidSpecError("eta must be nonzero")
        if not 2 <= self.k < self.n <= self.ctx.q:
            raise InvalidSpecError(
                "parameters must satisfy 2 <= k < n <= q",
                {"k": self.k, "n": self.n, "q": self.ctx.q}
            )

    @classmethod
    def from_codes(cls, ctx: FieldCtx, alpha, v=None, eta: int = 1, k: int = 2, extended: bool = True) -> "CodeSpec":
        points = ctx(list(alpha))
        multipliers = ctx.GF.Ones(points.size) if v is None else ctx(list(v))
        return cls(ctx, points, multipliers, ctx(int(eta)), k, extended)

    @property
    def n(self) -> int:
        return int(self.alpha.size)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n

    @property
    def alpha_set(self) -> tuple[int, ...]:
        """A_alpha as sorted element codes."""
        return tuple(sorted(codes(self.alpha).tolist()))

    @property
    def s_alpha(self) -> FieldElem:
        return np.add.reduce(self.alpha)

    def with_changes(self, **changes) -> "CodeSpec":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.ctx.p, "m": self.ctx.m, "modulus": list(self.ctx.modulus)},
            "alpha": codes(self.alpha).tolist(),
            "v": codes(self.v).tolist(),
            "eta": int(self.eta),
            "k": self.k,
            "extended": self.extended,
        }


def tgrs_generator(spec: CodeSpec) -> LinearCode:
    ctx = spec.ctx
    powers = powers_matrix(spec.alpha, spec.k + 1)
    rows = powers[: spec.k].copy()
    rows[spec.k - 1] = powers[spec.k - 1] + spec.eta * powers[spec.k]
    rows = rows * spec.v
    if spec.extended:
        column = np.zeros((spec.k, 1), dtype=np.int64)
        column[spec.k - 1, 0] = 1
        rows = ctx(np.hstack([codes(rows), column]))
    return LinearCode(ctx, Matrix(ctx, rows))
