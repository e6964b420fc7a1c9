"""
Twisted polynomial spaces V_{k,t,h,eta}.

Basis {x^i : i < k, i != h} together with x^h + eta*x^{k-1+t}. Codes over any
(t, h) can be built here; analysis only accepts the (+) variant (t, h) = (1, k-1).
"""
from dataclasses import dataclass

import galois
import numpy as np

from src.core.exceptions import InvalidSpecError, VariantError
from src.codes.linear_code import LinearCode
from src.gf.field import FieldCtx, FieldElem, codes
from src.grs.grs import as_vector, check_multipliers, check_points
from src.linalg.matrix import Matrix, rank
from src.tgrs.spec import CodeSpec


@dataclass(eq=False)
class TwistedPolySpace:
    """k-dimensional space of polynomials with one twist term."""

    ctx: FieldCtx
    k: int
    t: int
    h: int
    eta: FieldElem

    def __post_init__(self):
        if not isinstance(self.eta, self.ctx.GF):
            self.eta = self.ctx(int(self.eta))
        if int(self.eta) == 0:
            raise InvalidSpecError("twist coefficient eta must be nonzero")
        if self.t < 1:
            raise InvalidSpecError("twist must be at least 1", {"t": self.t})
        if not 0 <= self.h < self.k <= self.ctx.q:
            raise InvalidSpecError(
                "hook and dimension must satisfy 0 <= h < k <= q",
                {"h": self.h, "k": self.k, "q": self.ctx.q}
            )

    @property
    def is_plus_variant(self) -> bool:
        return self.t == 1 and self.h == self.k - 1


def twisted_basis(space: TwistedPolySpace) -> list[galois.Poly]:
    GF = space.ctx.GF
    top = space.k - 1 + space.t
    basis = []
    for i in range(space.k):
        coefficients = GF.Zeros(top + 1)
        coefficients[i] = 1
        if i == space.h:
            coefficients[top] = space.eta
        basis.append(galois.Poly(coefficients, order="asc"))
    return basis


def twisted_code(ctx: FieldCtx, alpha, v, space: TwistedPolySpace, extended: bool = False) -> LinearCode:
    """
    Evaluation code of the space at alpha scaled by v; the extended code
    appends each basis polynomial's x^{k-1} coefficient.

    Raises InvalidSpecError when some nonzero polynomial of the space vanishes
    on every point, e.g. x - x^5 on GF(5).
    """
    points = as_vector(ctx, alpha)
    multipliers = as_vector(ctx, v)
    check_points(points)
    check_multipliers(multipliers, int(points.size))
    basis = twisted_basis(space)
    rows = [codes(poly(points) * multipliers) for poly in basis]
    matrix = np.vstack(rows)
    if extended:
        column = np.array([[_coefficient(poly, space.k - 1)] for poly in basis], dtype=np.int64)
        matrix = np.hstack([matrix, column])
    generator = Matrix(ctx, ctx(matrix))
    if rank(generator) < space.k:
        raise InvalidSpecError(
            "twisted space is not injective on the evaluation set",
            {"k": space.k, "t": space.t, "h": space.h, "eta": int(space.eta), "alpha": codes(points).tolist()}
        )
    return LinearCode(ctx, generator)


def _coefficient(poly: galois.Poly, degree: int) -> int:
    if degree > poly.degree:
        return 0
    return int(poly.coeffs[poly.degree - degree])


def analysis_spec(ctx: FieldCtx, alpha, v, space: TwistedPolySpace, extended: bool = True) -> CodeSpec:
    """CodeSpec for the same code; only the (+) variant is analysable."""
    if not space.is_plus_variant:
        raise VariantError(
            "analysis defined only for (+) variant",
            {"t": space.t, "h": space.h, "k": space.k}
        )
    return CodeSpec(ctx, as_vector(ctx, alpha), as_vector(ctx, v), space.eta, space.k, extended)
