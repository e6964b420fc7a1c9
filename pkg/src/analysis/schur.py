"""
Schur squares of (+)-ETGRS codes and certificates that they are not GRS/EGRS.

For 3 <= k <= n/2 the square is spanned by (v^2*alpha^i, 0), i = 0..2k-2, and
(v^2*(2*eta*alpha^{2k-1} + eta^2*alpha^{2k}), 1); for k >= (n+1)/2 it is the
whole space.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
import structlog

from src.core.exceptions import InconsistencyError, InvalidSpecError, TheoremRangeError
from src.codes.linear_code import LinearCode, dual_code, schur_product
from src.gf.field import codes, powers_matrix
from src.linalg.matrix import Matrix, solve_linear, vstack
from src.tgrs.parity import etgrs_parity_check
from src.tgrs.spec import CodeSpec, tgrs_generator

logger = structlog.get_logger(__name__)


class CertificateKind(str, Enum):
    """Route used to show a code is not GRS or EGRS."""

    LOW_RATE_DIMENSION = "low-rate-dimension"
    HIGH_RATE_WEIGHT_ONE = "high-rate-weight-one"


@dataclass
class NonGrsCertificate:
    """Verified evidence that a (+)-ETGRS code is neither GRS nor EGRS."""

    kind: CertificateKind
    square_dimension: int
    grs_square_dimension: int
    witness: Optional[list[int]] = None
    grs_dual_square_distance: Optional[int] = None
    verified: bool = field(default=True)

    def to_dict(self) -> dict:
        data = {
            "type": "non-grs",
            "kind": self.kind.value,
            "square_dimension": self.square_dimension,
            "grs_square_dimension": self.grs_square_dimension,
            "verified": self.verified,
        }
        if self.witness is not None:
            data["witness"] = self.witness
            data["grs_dual_square_distance"] = self.grs_dual_square_distance
        return data


def _check(spec: CodeSpec) -> None:
    if not spec.extended:
        raise InvalidSpecError("Schur analysis applies to the extended code")
    if spec.k < 3:
        raise TheoremRangeError("Schur square closed form needs k >= 3", {"k": spec.k})


def schur_square_closed(spec: CodeSpec) -> LinearCode:
    _check(spec)
    ctx = spec.ctx
    n, k = spec.n, spec.k
    if 2 * k >= n + 1:
        return LinearCode.full_space(ctx, n + 1)
    squares = spec.v * spec.v
    powers = powers_matrix(spec.alpha, 2 * k + 1)
    two = ctx.one() + ctx.one()
    low = powers[: 2 * k - 1] * squares
    last = (two * spec.eta * powers[2 * k - 1] + spec.eta * spec.eta * powers[2 * k]) * squares
    body = codes(vstack(ctx, [low, last], n).data)
    column = np.zeros((2 * k, 1), dtype=np.int64)
    column[-1, 0] = 1
    return LinearCode(ctx, Matrix(ctx, ctx(np.hstack([body, column]))))


def non_grs_certificate(spec: CodeSpec) -> NonGrsCertificate:
    """
    Dimension route for k <= (n+1)/2: dim C^2 = 2k, while a GRS or EGRS square
    has dimension 2k-1. Weight-one route for k >= n/2+1: c1*c3 - c2*c2 built
    from the last three parity-check rows is a weight-one word of (C^perp)^2,
    while a GRS or EGRS dual square has distance 2k-n+1 >= 2.
    """
    _check(spec)
    n, k = spec.n, spec.k
    if k > n - 2:
        raise TheoremRangeError("non-GRS certificate needs 3 <= k <= n-2", {"k": k, "n": n})
    code = tgrs_generator(spec)

    if 2 * k <= n + 1:
        dimension = schur_product(code, code).dimension
        if dimension != 2 * k:
            raise InconsistencyError(
                "Schur square dimension differs from 2k", {"dimension": dimension, "k": k, "n": n}
            )
        logger.debug("non_grs_certified", kind="dimension", dimension=dimension)
        return NonGrsCertificate(CertificateKind.LOW_RATE_DIMENSION, dimension, 2 * k - 1)

    H = etgrs_parity_check(spec).data
    c1, c2, c3 = H[n - k - 2], H[n - k - 1], H[n - k]
    witness = c1 * c3 - c2 * c2
    witness_codes = codes(witness).tolist()
    if any(witness_codes[:-1]) or witness_codes[-1] == 0:
        raise InconsistencyError("witness is not a weight-one word", {"witness": witness_codes})
    dual = dual_code(code)
    dual_square = schur_product(dual, dual)
    if solve_linear(dual_square.generator.transpose(), witness) is None:
        raise InconsistencyError("witness not in the dual Schur square", {"witness": witness_codes})
    logger.debug("non_grs_certified", kind="weight_one", witness=witness_codes)
    return NonGrsCertificate(
        CertificateKind.HIGH_RATE_WEIGHT_ONE,
        schur_product(code, code).dimension,
        min(2 * k - 1, n + 1),
        witness=witness_codes,
        grs_dual_square_distance=2 * k - n + 1,
    )
