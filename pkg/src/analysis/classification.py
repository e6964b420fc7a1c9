"""
MDS/NMDS classification and weight distributions of (+)-ETGRS codes.

The number of weight-(n+1-k) codewords is (q-1) * #N(k, -eta^{-1}, A_alpha);
the code is MDS when that count vanishes and NMDS otherwise, and the count
fixes both weight distributions.
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

import structlog

from src.core.config import get_settings
from src.core.exceptions import CapacityError, InconsistencyError, InvalidSpecError
from src.codes.weights import (
    Classification,
    WeightDistribution,
    nmds_distribution,
    weight_distributions_bf,
)
from src.analysis.subset_sums import (
    SubsetSumQuery,
    domain_kind,
    first_subset_with_sum,
    subset_count_closed,
    subset_count_dp,
)
from src.gf.field import FieldCtx
from src.tgrs.spec import CodeSpec, tgrs_generator

logger = structlog.get_logger(__name__)


@dataclass
class EtgrsClassification:
    """Classification with the subset count behind it."""

    classification: Classification
    a_min: int
    subset_count: int
    target: int
    witness_subset: Optional[tuple[int, ...]] = None


def _require_extended(spec: CodeSpec) -> None:
    if not spec.extended:
        raise InvalidSpecError("classification applies to the extended code")


def twist_target(spec: CodeSpec) -> int:
    """Code of -eta^{-1}."""
    return int(-(spec.eta ** -1))


def minimum_weight_subsets(spec: CodeSpec) -> int:
    """#N(k, -eta^{-1}, A_alpha) by DP, cross-checked by the closed form on GF(q) and GF(q)^*."""
    target = twist_target(spec)
    count = subset_count_dp(SubsetSumQuery(spec.ctx, spec.k, target, spec.alpha_set))
    kind = domain_kind(spec.ctx, spec.alpha_set)
    if kind is not None:
        closed = subset_count_closed(spec.ctx, spec.k, target, kind)
        if closed != count:
            raise InconsistencyError(
                "closed subset count disagrees with DP",
                {"closed": closed, "dp": count, "kind": kind.value, "k": spec.k, "target": target}
            )
    return count


def etgrs_classify(spec: CodeSpec, with_witness: bool = False) -> EtgrsClassification:
    _require_extended(spec)
    count = minimum_weight_subsets(spec)
    a_min = (spec.ctx.q - 1) * count
    label = Classification.MDS if count == 0 else Classification.NMDS
    witness = None
    if with_witness and count:
        witness = first_subset_with_sum(spec.ctx, spec.k, twist_target(spec), spec.alpha_set)
    logger.debug("etgrs_classified", classification=label.value, a_min=a_min, k=spec.k, n=spec.n)
    return EtgrsClassification(label, a_min, count, twist_target(spec), witness)


def etgrs_weight_distribution(spec: CodeSpec) -> tuple[WeightDistribution, WeightDistribution]:
    """Closed-form distributions of the [n+1, k] code and its dual."""
    _require_extended(spec)
    a_min = (spec.ctx.q - 1) * minimum_weight_subsets(spec)
    return nmds_distribution(spec.n + 1, spec.k, spec.ctx.q, a_min)


def verify_against_brute_force(spec: CodeSpec) -> tuple[WeightDistribution, WeightDistribution]:
    """Closed-form distributions, checked against full enumeration."""
    closed_primal, closed_dual = etgrs_weight_distribution(spec)
    brute_primal, brute_dual = weight_distributions_bf(tgrs_generator(spec))
    if closed_primal.counts != brute_primal.counts or closed_dual.counts != brute_dual.counts:
        raise InconsistencyError(
            "closed weight distribution disagrees with enumeration",
            {"spec": spec.to_dict()}
        )
    if closed_primal.classification != brute_primal.classification:
        raise InconsistencyError(
            "classification disagrees with enumeration",
            {
                "closed": closed_primal.classification.value,
                "enumerated": brute_primal.classification.value,
            }
        )
    return closed_primal, closed_dual


@dataclass
class ClassificationCensus:
    """MDS/NMDS tallies over every (A_alpha, eta) with |A_alpha| = n."""

    q: int
    k: int
    n: int
    tallies: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.tallies.values())


def classification_census(ctx: FieldCtx, k: int, n: int) -> ClassificationCensus:
    """Classify C_{k,n}(alpha, 1, eta, infinity) for every evaluation set and eta."""
    if not 2 <= k < n <= ctx.q:
        raise InvalidSpecError("parameters must satisfy 2 <= k < n <= q", {"k": k, "n": n, "q": ctx.q})
    total = comb(ctx.q, n) * (ctx.q - 1)
    limit = get_settings().enumeration_limit
    if total > limit:
        raise CapacityError("census too large", {"specs": total, "enumeration_limit": limit})
    census = ClassificationCensus(ctx.q, k, n)
    for subset in combinations(range(ctx.q), n):
        for eta in range(1, ctx.q):
            spec = CodeSpec.from_codes(ctx, subset, eta=eta, k=k, extended=True)
            label = etgrs_classify(spec).classification
            census.tallies[label.value] += 1
            census.witnesses.setdefault(label.value, spec)
    logger.info("census_finished", q=ctx.q, k=k, n=n, **dict(census.tallies))
    return census
