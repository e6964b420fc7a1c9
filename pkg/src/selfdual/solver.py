"""
Self-orthogonality of (+)-TGRS and (+)-ETGRS codes via a witness polynomial.

For 3 <= k <= q/2 the code is self-orthogonal iff some g of degree <= q-2k
vanishes off A_alpha, takes g(alpha_j) = v_j^2 on A_alpha, and meets one
coefficient condition:

    plain      eta*g_{q-1-2k} + 2*g_{q-2k} = 0
    extended   eta^2*g_{q-1-2k} + 2*eta*g_{q-2k} = 1

(g_{-1} is read as 0 when q = 2k). In characteristic 2 these become
g_{q-1-2k} = 0 and eta^2*g_{q-1-2k} = 1.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import galois
import numpy as np
import structlog

from src.core.exceptions import InconsistencyError, InvalidSpecError, TheoremRangeError
from src.codes.orthogonality import is_self_orthogonal, orthogonality_report
from src.gf.field import FieldElem, codes, power, powers_matrix
from src.grs.grs import u_vector
from src.linalg.matrix import solve_linear, vstack
from src.tgrs.spec import CodeSpec, tgrs_generator

logger = structlog.get_logger(__name__)


class OrthCondition(str, Enum):
    """Coefficient condition met by a witness polynomial."""

    PLAIN_ODD = "plain-odd"
    PLAIN_EVEN = "plain-even"
    EXTENDED_ODD = "extended-odd"
    EXTENDED_EVEN = "extended-even"


class Verdict(str, Enum):
    SELF_DUAL = "self-dual"
    ALMOST_SELF_DUAL = "almost-self-dual"


@dataclass
class SelfOrthWitness:
    """Witness polynomial g with the condition it satisfies."""

    g: galois.Poly
    condition: OrthCondition
    lam: Optional[FieldElem] = None

    def coefficients(self, degree: int) -> list[int]:
        """g_0..g_degree as codes."""
        values = codes(self.g.coeffs[::-1]).tolist()
        return (values + [0] * (degree + 1))[: degree + 1]

    def to_dict(self) -> dict:
        data = {
            "type": "self-orthogonal",
            "condition": self.condition.value,
            "witness_poly": codes(self.g.coeffs[::-1]).tolist(),
            "verified": True,
        }
        if self.lam is not None:
            data["lambda"] = int(self.lam)
        return data


@dataclass
class SelfDualCertificate:
    """Scalar lambda with lambda*u_j = v_j^2 and the verdict it certifies."""

    verdict: Verdict
    lam: FieldElem
    verified: bool = True

    def to_dict(self) -> dict:
        return {"type": self.verdict.value, "lambda": int(self.lam), "verified": self.verified}


def condition_for(spec: CodeSpec) -> OrthCondition:
    if spec.extended:
        return OrthCondition.EXTENDED_EVEN if spec.ctx.is_even else OrthCondition.EXTENDED_ODD
    return OrthCondition.PLAIN_EVEN if spec.ctx.is_even else OrthCondition.PLAIN_ODD


def _check_range(spec: CodeSpec) -> None:
    if not 3 <= spec.k <= spec.ctx.q // 2:
        raise TheoremRangeError(
            "self-orthogonality criterion needs 3 <= k <= q/2", {"k": spec.k, "q": spec.ctx.q}
        )


def solve_self_orth(spec: CodeSpec) -> Optional[SelfOrthWitness]:
    """Witness polynomial if the code is self-orthogonal, else None."""
    _check_range(spec)
    ctx = spec.ctx
    degree = ctx.q - 2 * spec.k
    two = ctx.one() + ctx.one()

    # evaluation rows over every field element
    evaluation = powers_matrix(ctx.elements(), degree + 1).T
    rhs = ctx.GF.Zeros(ctx.q + 1)
    rhs[codes(spec.alpha)] = spec.v * spec.v

    coefficient_row = ctx.GF.Zeros((1, degree + 1))
    if spec.extended:
        coefficient_row[0, degree] = two * spec.eta
        if degree >= 1:
            coefficient_row[0, degree - 1] = spec.eta * spec.eta
        rhs[ctx.q] = 1
    else:
        coefficient_row[0, degree] = two
        if degree >= 1:
            coefficient_row[0, degree - 1] = spec.eta

    system = vstack(ctx, [evaluation, coefficient_row], degree + 1)
    solution = solve_linear(system, rhs)
    if solution is None:
        logger.debug("self_orth_unsolvable", k=spec.k, n=spec.n, extended=spec.extended)
        return None

    if not is_self_orthogonal(tgrs_generator(spec)):
        raise InconsistencyError(
            "witness polynomial found but Gram matrix is nonzero", {"spec": spec.to_dict()}
        )
    logger.debug("self_orth_solved", k=spec.k, n=spec.n, extended=spec.extended)
    return SelfOrthWitness(galois.Poly(solution, order="asc"), condition_for(spec))


def certify_self_dual_2k(spec: CodeSpec, extended: Optional[bool] = None) -> Optional[SelfDualCertificate]:
    """
    For n = 2k: self-dual (plain) iff eta*S + 2 = 0 and lambda*u_j = v_j^2;
    almost self-dual (extended) iff lambda*eta*(eta*S + 2) = 1 and lambda*u_j = v_j^2.
    """
    if extended is not None and extended != spec.extended:
        spec = spec.with_changes(extended=extended)
    if spec.n != 2 * spec.k:
        raise InvalidSpecError("certification needs n = 2k", {"n": spec.n, "k": spec.k})
    _check_range(spec)
    ctx = spec.ctx
    u = u_vector(spec.alpha)
    squares = spec.v * spec.v
    lam = squares[0] / u[0]
    if np.any(squares != lam * u):
        return None

    two = ctx.one() + ctx.one()
    balance = spec.eta * spec.s_alpha + two
    if spec.extended:
        holds = int(lam * spec.eta * balance) == 1
        verdict = Verdict.ALMOST_SELF_DUAL
    else:
        holds = int(balance) == 0
        verdict = Verdict.SELF_DUAL
    if not holds:
        return None

    report = orthogonality_report(tgrs_generator(spec))
    confirmed = report.almost_self_dual if spec.extended else report.self_dual
    if not confirmed:
        raise InconsistencyError(
            "scalar conditions hold but Gram check fails", {"spec": spec.to_dict()}
        )
    return SelfDualCertificate(verdict, lam)


def witness_from_lambda(spec: CodeSpec, lam: FieldElem) -> galois.Poly:
    """g = lambda * prod_{beta not in A_alpha} (x - beta)."""
    ctx = spec.ctx
    members = set(spec.alpha_set)
    outside = [b for b in range(ctx.q) if b not in members]
    if not outside:
        return galois.Poly([int(lam)], field=ctx.GF)
    return galois.Poly.Roots(ctx(outside)) * galois.Poly([int(lam)], field=ctx.GF)


def descend_self_orthogonal(spec: CodeSpec, target_dimension: int) -> CodeSpec:
    """
    Self-orthogonal code of dimension l from one of dimension k: same data for
    the plain code, v replaced by alpha^{k-l} * v for the extended code.
    """
    k, l = spec.k, target_dimension
    if not 3 <= l <= k:
        raise TheoremRangeError("descent needs 3 <= l <= k", {"l": l, "k": k})
    if spec.extended and 0 in spec.alpha_set:
        raise InvalidSpecError("extended descent needs 0 outside A_alpha")
    if not is_self_orthogonal(tgrs_generator(spec)):
        raise InvalidSpecError("descent source is not self-orthogonal", {"spec": spec.to_dict()})
    if l == k:
        return spec
    if spec.extended:
        descended = spec.with_changes(k=l, v=power(spec.alpha, k - l) * spec.v)
    else:
        descended = spec.with_changes(k=l)
    if not is_self_orthogonal(tgrs_generator(descended)):
        raise InconsistencyError("descended code is not self-orthogonal", {"spec": descended.to_dict()})
    return descended
