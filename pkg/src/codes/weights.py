"""
Weight enumeration and MDS/AMDS/NMDS classification.

Brute force enumerates every message vector in vectorised blocks; the dual
distribution follows from the MacWilliams identities in exact integers. The
closed NMDS formulas give both distributions from the count of minimum-weight
words alone.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import comb

import numpy as np
import structlog

from src.core.config import get_settings
from src.core.exceptions import CapacityError, InconsistencyError, InvalidCodeError
from src.codes.linear_code import LinearCode
from src.gf.field import codes

logger = structlog.get_logger(__name__)


class Classification(str, Enum):
    """Distance class of a linear code."""

    MDS = "MDS"
    AMDS = "AMDS"
    NMDS = "NMDS"
    OTHER = "other"


@dataclass
class WeightDistribution:
    """Counts A_0..A_N of codewords by Hamming weight."""

    counts: list[int]
    length: int
    dimension: int
    q: int
    classification: Classification = Classification.OTHER
    dual_min_distance: int | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.counts) != self.length + 1:
            raise InconsistencyError(
                "weight distribution must have N + 1 entries",
                {"length": self.length, "entries": len(self.counts)}
            )
        if any(count < 0 for count in self.counts):
            raise InconsistencyError("negative codeword count", {"counts": [str(c) for c in self.counts]})
        if self.counts[0] != 1:
            raise InconsistencyError("A_0 must be 1", {"A_0": str(self.counts[0])})
        if sum(self.counts) != self.q ** self.dimension:
            raise InconsistencyError(
                "counts do not sum to q^k",
                {"sum": str(sum(self.counts)), "q": self.q, "k": self.dimension}
            )

    @property
    def min_distance(self) -> int:
        """Smallest nonzero weight; N + 1 for the zero code."""
        for weight in range(1, self.length + 1):
            if self.counts[weight]:
                return weight
        return self.length + 1

    def to_dict(self) -> dict:
        return {
            "counts": [str(count) for count in self.counts],
            "classification": self.classification.value,
        }


def classify(length: int, dimension: int, distance: int, dual_distance: int) -> Classification:
    """MDS: d = N-k+1; NMDS: d = N-k and d_dual = k; AMDS: d = N-k otherwise."""
    if distance == length - dimension + 1:
        return Classification.MDS
    if distance == length - dimension:
        if dual_distance == dimension:
            return Classification.NMDS
        return Classification.AMDS
    return Classification.OTHER


def _check_capacity(C: LinearCode) -> int:
    total = C.ctx.q ** C.dimension
    limit = get_settings().enumeration_limit
    if total > limit:
        raise CapacityError(
            "message space too large to enumerate",
            {"q": C.ctx.q, "k": C.dimension, "messages": total, "enumeration_limit": limit}
        )
    return total


def weight_counts(C: LinearCode) -> list[int]:
    """Exact A_0..A_N by enumerating all q^k messages."""
    total = _check_capacity(C)
    q, k, N = C.ctx.q, C.dimension, C.length
    counts = np.zeros(N + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return counts.tolist()
    chunk = get_settings().enumeration_chunk
    place_values = q ** np.arange(k, dtype=np.int64)
    generator = C.generator.data
    logger.debug("weight_enumeration_started", q=q, k=k, length=N, messages=total)
    for start in range(0, total, chunk):
        index = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (index[:, np.newaxis] // place_values) % q
        words = C.ctx.GF(digits) @ generator
        weights = np.count_nonzero(codes(words), axis=1)
        counts += np.bincount(weights, minlength=N + 1)
    return [int(count) for count in counts]


def min_distance(C: LinearCode) -> int:
    """Minimum weight over nonzero codewords; N + 1 for the zero code."""
    counts = weight_counts(C)
    for weight in range(1, C.length + 1):
        if counts[weight]:
            return weight
    return C.length + 1


def krawtchouk(j: int, i: int, length: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(length - i, j - s)
        for s in range(j + 1)
    )


def macwilliams(counts: list[int], length: int, dimension: int, q: int) -> list[int]:
    """Dual weight distribution from the primal one."""
    size = q ** dimension
    dual = []
    for j in range(length + 1):
        total = sum(counts[i] * krawtchouk(j, i, length, q) for i in range(length + 1))
        if total % size:
            raise InconsistencyError("MacWilliams transform not integral", {"weight": j})
        dual.append(total // size)
    return dual


def weight_distributions_bf(C: LinearCode) -> tuple[WeightDistribution, WeightDistribution]:
    """Brute-force distributions of C and of C^perp, both classified."""
    N, k, q = C.length, C.dimension, C.ctx.q
    counts = weight_counts(C)
    dual_counts = macwilliams(counts, N, k, q)
    distance = _first_weight(counts, N)
    dual_distance = _first_weight(dual_counts, N)
    primal = WeightDistribution(
        counts, N, k, q, classify(N, k, distance, dual_distance), dual_min_distance=dual_distance
    )
    dual = WeightDistribution(
        dual_counts, N, N - k, q, classify(N, N - k, dual_distance, distance), dual_min_distance=distance
    )
    return primal, dual


def weight_distribution_bf(C: LinearCode) -> WeightDistribution:
    return weight_distributions_bf(C)[0]


def _first_weight(counts: list[int], length: int) -> int:
    for weight in range(1, length + 1):
        if counts[weight]:
            return weight
    return length + 1


def _tail(length: int, dimension: int, s: int, q: int) -> int:
    """C(N, r+s) * sum_{j<s} (-1)^j C(r+s, j) (q^{s-j} - 1) with r = dimension."""
    return comb(length, dimension + s) * sum(
        (-1) ** j * comb(dimension + s, j) * (q ** (s - j) - 1) for j in range(s)
    )


def nmds_distribution(length: int, dimension: int, q: int, a_min: int) -> tuple[WeightDistribution, WeightDistribution]:
    """
    Distributions of an [N, k] code with d >= N - k and its dual, given the
    number a_min of weight-(N-k) words (0 for MDS).

    A_{N-k+s}  = C(N,k-s) sum_{j<s} (-1)^j C(N-k+s,j)(q^{s-j}-1) + (-1)^s C(k,s)   a_min
    A^_|_{k+s} = C(N,k+s) sum_{j<s} (-1)^j C(k+s,j)(q^{s-j}-1)   + (-1)^s C(N-k,s) a_min
    """
    N, k = length, dimension
    if not 1 <= k < N:
        raise InvalidCodeError("closed distribution needs 1 <= k < N", {"N": N, "k": k})
    if a_min < 0:
        raise InconsistencyError("minimum-weight count must be nonnegative", {"a_min": a_min})

    primal = [0] * (N + 1)
    primal[0] = 1
    primal[N - k] += a_min
    for s in range(1, k + 1):
        primal[N - k + s] = _tail(N, N - k, s, q) + (-1) ** s * comb(k, s) * a_min

    dual = [0] * (N + 1)
    dual[0] = 1
    dual[k] += a_min
    for s in range(1, N - k + 1):
        dual[k + s] = _tail(N, k, s, q) + (-1) ** s * comb(N - k, s) * a_min

    if any(count < 0 for count in primal + dual):
        raise InconsistencyError(
            "closed distribution has a negative count; a_min is not attainable",
            {"N": N, "k": k, "q": q, "a_min": str(a_min)}
        )
    label = Classification.MDS if a_min == 0 else Classification.NMDS
    distance = N - k + 1 if a_min == 0 else N - k
    dual_distance = k + 1 if a_min == 0 else k
    return (
        WeightDistribution(primal, N, k, q, label, dual_min_distance=dual_distance),
        WeightDistribution(dual, N, N - k, q, label, dual_min_distance=distance),
    )
