"""
Explicit self-dual and almost self-dual constructions.

Every construction picks v_j as the canonical square root of lambda*u_j, with
lambda fixed by the n = 2k certification conditions, and returns only specs
that certify:

    even q, self-dual           lambda = 1, S_alpha = 0
    even q, almost self-dual    lambda = eta^{-2}, S_alpha = 1, 0 not in A_alpha
    odd q, zero-hole            lambda = 1, eta = 2*gamma^{-i0}
    odd q, plain / trace        lambda = (2*eta)^{-1}, S_alpha = 0
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import galois
import numpy as np
import structlog

from src.core.exceptions import ConstructionError, InconsistencyError
from src.analysis.classification import EtgrsClassification, etgrs_classify
from src.analysis.subset_sums import SubsetDomain, domain_codes, first_subset_with_sum
from src.gf.field import (
    FieldCtx,
    FieldElem,
    codes,
    field_create,
    field_trace,
    in_subfield,
    subfield_generator,
)
from src.gf.roots import is_square, sqrt_vector
from src.grs.grs import u_vector
from src.selfdual.solver import SelfDualCertificate, Verdict, certify_self_dual_2k
from src.tgrs.spec import CodeSpec

logger = structlog.get_logger(__name__)


class BuildTarget(str, Enum):
    SELF_DUAL = "self-dual"
    ALMOST_SELF_DUAL = "almost-self-dual"


class OddVariant(str, Enum):
    ZERO_HOLE = "zero-hole"
    PLAIN = "plain"


class EtaRegime(str, Enum):
    """eta outside GF(p^m) (MDS) or inside it with a minimum-weight subset (NMDS)."""

    MDS = "mds"
    NMDS = "nmds"


@dataclass
class ConstructionResult:
    """Certified spec produced by a construction."""

    name: str
    spec: CodeSpec
    certificate: SelfDualCertificate
    classification: Optional[EtgrsClassification] = None

    def to_dict(self) -> dict:
        data = {
            "construction": self.name,
            "spec": self.spec.to_dict(),
            "length": self.spec.length,
            "dimension": self.spec.k,
            "certificate": self.certificate.to_dict(),
        }
        if self.classification is not None:
            data["classification"] = self.classification.classification.value
            data["A_min"] = str(self.classification.a_min)
        return data


def _multipliers(ctx: FieldCtx, lam: FieldElem, values: galois.FieldArray) -> galois.FieldArray:
    roots = sqrt_vector(ctx, codes(lam * values))
    if roots is None:
        raise ConstructionError(
            "lambda * u_j is not a square for every j", {"lambda": int(lam), "field": ctx.name}
        )
    return roots


def _certify(name: str, spec: CodeSpec, expected: Verdict) -> SelfDualCertificate:
    certificate = certify_self_dual_2k(spec)
    if certificate is None or certificate.verdict is not expected:
        raise InconsistencyError(f"{name} construction did not certify", {"spec": spec.to_dict()})
    logger.info(
        "construction_certified",
        construction=name,
        field=spec.ctx.name,
        length=spec.length,
        dimension=spec.k,
        verdict=expected.value
    )
    return certificate


def default_even_subset(ctx: FieldCtx, k: int, target: BuildTarget) -> tuple[int, ...]:
    """First 2k-subset of GF(q) summing to 0, or of GF(q)^* summing to 1."""
    if BuildTarget(target) is BuildTarget.SELF_DUAL:
        subset = first_subset_with_sum(ctx, 2 * k, 0, domain_codes(ctx, SubsetDomain.FULL_FIELD))
    else:
        subset = first_subset_with_sum(ctx, 2 * k, 1, domain_codes(ctx, SubsetDomain.MULTIPLICATIVE_GROUP))
    if subset is None:
        raise ConstructionError("no evaluation set with the required sum", {"k": k, "q": ctx.q})
    return subset


def construct_even(
    ctx: FieldCtx,
    k: int,
    subset: Optional[Sequence[int]],
    target: BuildTarget,
    eta: Optional[int] = None,
) -> ConstructionResult:
    """
    q even, 3 <= k <= (q-2)/2, |A| = 2k. Self-dual: sum A = 0 (plain code).
    Almost self-dual: sum A = 1 and A inside GF(q)^* (extended code).
    """
    target = BuildTarget(target)
    if not ctx.is_even:
        raise ConstructionError("even construction needs characteristic 2", {"field": ctx.name})
    if not 3 <= k <= (ctx.q - 2) // 2:
        raise ConstructionError("even construction needs 3 <= k <= (q-2)/2", {"k": k, "q": ctx.q})
    members = tuple(subset) if subset is not None else default_even_subset(ctx, k, target)
    alpha = ctx(list(members))
    if alpha.size != 2 * k or len(set(members)) != 2 * k:
        raise ConstructionError("evaluation set must have 2k distinct points", {"k": k, "size": len(members)})
    eta_value = ctx(1 if eta is None else int(eta))
    if int(eta_value) == 0:
        raise ConstructionError("eta must be nonzero")

    total = int(np.add.reduce(alpha))
    if target is BuildTarget.SELF_DUAL:
        if total != 0:
            raise ConstructionError("self-dual construction needs sum A = 0", {"sum": total})
        lam = ctx.one()
    else:
        if total != 1 or 0 in members:
            raise ConstructionError(
                "almost self-dual construction needs A in GF(q)^* with sum A = 1", {"sum": total}
            )
        lam = eta_value ** -2

    v = _multipliers(ctx, lam, u_vector(alpha))
    extended = target is BuildTarget.ALMOST_SELF_DUAL
    spec = CodeSpec(ctx, alpha, v, eta_value, k, extended)
    expected = Verdict.ALMOST_SELF_DUAL if extended else Verdict.SELF_DUAL
    certificate = _certify("even", spec, expected)
    classification = etgrs_classify(spec) if extended else None
    return ConstructionResult("even", spec, certificate, classification)


def _default_plain_eta(ctx: FieldCtx, m: int, alpha: galois.FieldArray, k: int, regime: EtaRegime) -> FieldElem:
    for value in range(1, ctx.q):
        candidate = ctx(value)
        inside = bool(in_subfield(candidate, m))
        if regime is EtaRegime.MDS:
            if not inside and is_square((ctx.one() + ctx.one()) * candidate):
                return candidate
        elif inside:
            spec = CodeSpec(ctx, alpha, ctx.GF.Ones(alpha.size), candidate, k, True)
            if etgrs_classify(spec).subset_count > 0:
                return candidate
    raise ConstructionError("no eta in the requested regime", {"regime": regime.value, "field": ctx.name})


def construct_odd_pcd1(
    p: int,
    m: int,
    k: int,
    variant: OddVariant,
    eta: Optional[int] = None,
    i0: Optional[int] = None,
    regime: Optional[EtaRegime] = None,
) -> ConstructionResult:
    """
    Over GF(p^{2m}) with gamma generating GF(p^m)^* and
    alpha = (gamma, ..., gamma^k, -gamma, ..., -gamma^k).

    zero-hole: alpha_{i0} replaced by 0 and eta = 2*gamma^{-i0}; self-dual [2k, k].
    plain: almost self-dual [2k+1, k]; MDS when eta lies outside GF(p^m),
    NMDS when a k-subset of A_alpha sums to -eta^{-1}.
    """
    variant = OddVariant(variant)
    if p == 2:
        raise ConstructionError("odd construction needs an odd prime", {"p": p})
    if not 3 <= k <= (p ** m - 1) // 2:
        raise ConstructionError("odd construction needs 3 <= k <= (p^m-1)/2", {"k": k, "p": p, "m": m})
    ctx = field_create(p, 2 * m)
    gamma = subfield_generator(ctx, m)
    positive = [gamma ** i for i in range(1, k + 1)]
    points = [int(x) for x in positive] + [int(-x) for x in positive]
    two = ctx.one() + ctx.one()

    if variant is OddVariant.ZERO_HOLE:
        if i0 is None or not 1 <= i0 <= k:
            raise ConstructionError("zero-hole variant needs 1 <= i0 <= k", {"i0": i0, "k": k})
        points[i0 - 1] = 0
        alpha = ctx(points)
        eta_value = two * gamma ** -i0
        if eta is not None and int(eta) != int(eta_value):
            raise ConstructionError(
                "zero-hole variant fixes eta = 2*gamma^{-i0}", {"eta": int(eta), "required": int(eta_value)}
            )
        v = _multipliers(ctx, ctx.one(), u_vector(alpha))
        spec = CodeSpec(ctx, alpha, v, eta_value, k, extended=False)
        certificate = _certify("odd-zero-hole", spec, Verdict.SELF_DUAL)
        return ConstructionResult("odd-zero-hole", spec, certificate)

    alpha = ctx(points)
    regime = EtaRegime(regime) if regime is not None else None
    if eta is None:
        eta_value = _default_plain_eta(ctx, m, alpha, k, regime or EtaRegime.MDS)
    else:
        eta_value = ctx(int(eta))
        if int(eta_value) == 0:
            raise ConstructionError("eta must be nonzero")
    inside = bool(in_subfield(eta_value, m))
    if regime is EtaRegime.MDS and inside:
        raise ConstructionError("MDS regime needs eta outside GF(p^m)", {"eta": int(eta_value)})

    lam = (two * eta_value) ** -1
    if not is_square(lam):
        raise ConstructionError("2*eta must be a square in GF(q)", {"eta": int(eta_value)})
    v = _multipliers(ctx, lam, u_vector(alpha))
    spec = CodeSpec(ctx, alpha, v, eta_value, k, extended=True)
    certificate = _certify("odd-plain", spec, Verdict.ALMOST_SELF_DUAL)
    classification = etgrs_classify(spec, with_witness=True)
    if regime is EtaRegime.NMDS and classification.subset_count == 0:
        raise ConstructionError("NMDS regime needs a k-subset summing to -eta^{-1}", {"eta": int(eta_value)})
    if not inside and classification.subset_count:
        raise InconsistencyError("eta outside GF(p^m) produced an NMDS code", {"eta": int(eta_value)})
    return ConstructionResult("odd-plain", spec, certificate, classification)


def construct_trace(p: int, r: int, m: int, eta: Optional[int] = None) -> ConstructionResult:
    """
    A_alpha = GF(p^m) minus Ker(Tr_r^m), v_j = sqrt(lambda*Tr(alpha_j)); almost
    self-dual [p^m - p^{m-r} + 1, (p^m - p^{m-r})/2] code.
    """
    if p == 2:
        raise ConstructionError("trace construction needs an odd prime", {"p": p})
    if r < 1 or m % r != 0 or (m // r) % 2 != 0:
        raise ConstructionError("trace construction needs 2 | m/r", {"m": m, "r": r})
    ctx = field_create(p, m)
    q = ctx.q
    n = q - p ** (m - r)
    k = n // 2
    if not 3 <= k <= (q - 2) // 2:
        raise ConstructionError("trace construction needs 3 <= k <= (q-2)/2", {"k": k, "q": q})

    traces = field_trace(ctx.elements(), r)
    kernel_size = int(np.count_nonzero(codes(traces) == 0))
    if kernel_size != p ** (m - r):
        raise InconsistencyError("trace kernel has the wrong size", {"size": kernel_size})
    support = np.flatnonzero(codes(traces))
    alpha = ctx(support)
    two = ctx.one() + ctx.one()
    eta_value = two ** -1 if eta is None else ctx(int(eta))
    if int(eta_value) == 0:
        raise ConstructionError("eta must be nonzero")
    lam = (two * eta_value) ** -1
    if not is_square(lam):
        raise ConstructionError("2*eta must be a square in GF(q)", {"eta": int(eta_value)})

    v = _multipliers(ctx, lam, traces[support])
    spec = CodeSpec(ctx, alpha, v, eta_value, k, extended=True)
    certificate = _certify("trace", spec, Verdict.ALMOST_SELF_DUAL)
    return ConstructionResult("trace", spec, certificate, etgrs_classify(spec))
