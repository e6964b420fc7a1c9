"""
Counting t-element subsets of D subset GF(q) with a prescribed sum.

#N(t, b, D) by dynamic programming for any D, and by closed forms for D = GF(q)
and D = GF(q)^*.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import CapacityError, InconsistencyError, InvalidSpecError
from src.gf.field import FieldCtx, codes


class SubsetDomain(str, Enum):
    """Domains with a closed-form subset count."""

    FULL_FIELD = "full-field"
    MULTIPLICATIVE_GROUP = "multiplicative-group"


@dataclass(eq=False)
class SubsetSumQuery:
    """Count t-subsets of domain summing to target (element codes)."""

    ctx: FieldCtx
    t: int
    target: int
    domain: tuple[int, ...]

    def __post_init__(self):
        self.domain = tuple(sorted(set(int(d) for d in self.domain)))
        if not 0 <= self.t <= len(self.domain):
            raise InvalidSpecError(
                "subset size must satisfy 0 <= t <= |D|", {"t": self.t, "size": len(self.domain)}
            )
        if not 0 <= int(self.target) < self.ctx.q:
            raise InvalidSpecError("target outside the field", {"target": self.target})


def subset_count_dp(query: SubsetSumQuery) -> int:
    """
    Exact count over distinct subsets.

    layers[s, x] holds the number of s-subsets of the elements seen so far with
    sum code x; each element d shifts layer s-1 into layer s through the
    permutation x -> x + d.
    """
    ctx = query.ctx
    limit = get_settings().subset_domain_limit
    if len(query.domain) > limit:
        raise CapacityError(
            "subset-sum domain too large", {"size": len(query.domain), "subset_domain_limit": limit}
        )
    elements = ctx.elements()
    layers = np.zeros((query.t + 1, ctx.q), dtype=object)
    layers[0, 0] = 1
    for seen, d in enumerate(query.domain):
        shift = codes(elements + ctx.GF(d))
        for size in range(min(query.t, seen + 1), 0, -1):
            layers[size, shift] += layers[size - 1]
    return int(layers[query.t, int(query.target)])


def _v(q: int, target: int) -> int:
    return q - 1 if target == 0 else -1


def subset_count_closed(ctx: FieldCtx, t: int, target: int, kind: SubsetDomain) -> int:
    """
    #N(t, b, GF(q)^*) = (C(q-1,t) + (-1)^{t+floor(t/p)} v(b) C(q/p-1, floor(t/p))) / q
    #N(t, b, GF(q))   = C(q,t)/q when p does not divide t, else
                        (C(q,t) + (-1)^{t+t/p} v(b) C(q/p, t/p)) / q
    with v(0) = q-1 and v(b) = -1 otherwise.
    """
    q, p = ctx.q, ctx.p
    kind = SubsetDomain(kind)
    if kind is SubsetDomain.MULTIPLICATIVE_GROUP:
        if not 0 <= t <= q - 1:
            raise InvalidSpecError("t must satisfy 0 <= t <= q-1", {"t": t, "q": q})
        numerator = comb(q - 1, t) + (-1) ** (t + t // p) * _v(q, target) * comb(q // p - 1, t // p)
    else:
        if not 0 <= t <= q:
            raise InvalidSpecError("t must satisfy 0 <= t <= q", {"t": t, "q": q})
        numerator = comb(q, t)
        if t % p == 0:
            numerator += (-1) ** (t + t // p) * _v(q, target) * comb(q // p, t // p)
    if numerator % q:
        raise InconsistencyError(
            "closed subset count is not an integer", {"t": t, "target": target, "q": q, "kind": kind.value}
        )
    return numerator // q


def domain_kind(ctx: FieldCtx, domain: Sequence[int]) -> Optional[SubsetDomain]:
    members = set(int(d) for d in domain)
    if members == set(range(ctx.q)):
        return SubsetDomain.FULL_FIELD
    if members == set(range(1, ctx.q)):
        return SubsetDomain.MULTIPLICATIVE_GROUP
    return None


def domain_codes(ctx: FieldCtx, kind: SubsetDomain) -> tuple[int, ...]:
    start = 0 if SubsetDomain(kind) is SubsetDomain.FULL_FIELD else 1
    return tuple(range(start, ctx.q))


def first_subset_with_sum(ctx: FieldCtx, t: int, target: int, domain: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically first t-subset of the sorted domain summing to target."""
    members = sorted(set(int(d) for d in domain))
    if comb(len(members), t) > get_settings().enumeration_limit:
        raise CapacityError("too many subsets to scan", {"size": len(members), "t": t})
    for subset in combinations(members, t):
        total = np.add.reduce(ctx(list(subset))) if subset else ctx.zero()
        if int(total) == int(target):
            return subset
    return None
