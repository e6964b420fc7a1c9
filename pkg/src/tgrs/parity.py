"""
Parity-check matrix of the (+)-ETGRS code and the L_A power-sum helper.

H has rows ((u_j/v_j) alpha_j^l)_j for l = 0..n-k; its last column is zero
except eta in row n-k-1 and 1 + eta*S_alpha in row n-k.
"""
from typing import Sequence

import galois
import numpy as np

from src.core.exceptions import InvalidSpecError, TheoremRangeError
from src.gf.field import FieldCtx, FieldElem, codes, power, powers_matrix
from src.grs.grs import u_vector
from src.linalg.matrix import Matrix
from src.tgrs.spec import CodeSpec


def etgrs_parity_check(spec: CodeSpec) -> Matrix:
    if not spec.extended:
        raise InvalidSpecError("parity-check formula applies to the extended code")
    ctx = spec.ctx
    n, k = spec.n, spec.k
    scale = u_vector(spec.alpha) / spec.v
    rows = powers_matrix(spec.alpha, n - k + 1) * scale
    column = ctx.GF.Zeros((n - k + 1, 1))
    column[n - k - 1, 0] = spec.eta
    column[n - k, 0] = ctx.one() + spec.eta * spec.s_alpha
    return Matrix(ctx, ctx(np.hstack([codes(rows), codes(column)])))


def etgrs_dual_codeword(spec: CodeSpec, g) -> galois.FieldArray:
    """
    ((u_j/v_j) g(alpha_j))_j followed by eta*g_{n-k-1} + (1 + eta*S_alpha)*g_{n-k},
    for g of degree at most n-k (given as a Poly or low-to-high coefficients).
    """
    if not spec.extended:
        raise InvalidSpecError("dual codeword map applies to the extended code")
    ctx = spec.ctx
    n, k = spec.n, spec.k
    coefficients = _low_to_high(ctx, g)
    if coefficients.size > n - k + 1:
        if np.any(coefficients[n - k + 1:] != 0):
            raise InvalidSpecError("g must have degree at most n-k", {"n": n, "k": k})
        coefficients = coefficients[: n - k + 1]
    padded = ctx.GF.Zeros(n - k + 1)
    padded[: coefficients.size] = coefficients
    values = padded @ powers_matrix(spec.alpha, n - k + 1)
    body = u_vector(spec.alpha) / spec.v * values
    tail = spec.eta * padded[n - k - 1] + (ctx.one() + spec.eta * spec.s_alpha) * padded[n - k]
    return ctx(np.append(codes(body), int(tail)))


def _low_to_high(ctx: FieldCtx, g) -> galois.FieldArray:
    if isinstance(g, galois.Poly):
        return ctx(codes(g.coeffs[::-1]))
    return ctx(list(g))


def l_sum_direct(ctx: FieldCtx, subset: Sequence[int], exponent: int) -> FieldElem:
    """sum_{alpha in A} alpha^m prod_{beta not in A} (alpha - beta)."""
    member_set = set(int(a) for a in subset)
    members = sorted(member_set)
    outside = [b for b in range(ctx.q) if b not in member_set]
    points = ctx(members)
    terms = power(points, exponent)
    if outside:
        differences = points[:, np.newaxis] - ctx(outside)[np.newaxis, :]
        terms = terms * np.multiply.reduce(differences, axis=1)
    return np.add.reduce(terms)


def l_sum_closed(ctx: FieldCtx, subset: Sequence[int], exponent: int) -> FieldElem:
    """0 for m <= |A|-2, -1 for m = |A|-1, -S_A for m = |A|."""
    members = sorted(set(int(a) for a in subset))
    size = len(members)
    if exponent <= size - 2:
        return ctx.zero()
    if exponent == size - 1:
        return -ctx.one()
    if exponent == size:
        return -np.add.reduce(ctx(members))
    raise TheoremRangeError("closed form stated only for m <= |A|", {"m": exponent, "size": size})


def l_sum(ctx: FieldCtx, subset: Sequence[int], exponent: int) -> FieldElem:
    """Direct evaluation of L_A(m) on the range where the closed form is stated."""
    size = len(set(int(a) for a in subset))
    if size <= 2:
        raise InvalidSpecError("L_A needs |A| > 2", {"size": size})
    if not 0 <= exponent <= size:
        raise TheoremRangeError("L_A evaluated only for 0 <= m <= |A|", {"m": exponent, "size": size})
    return l_sum_direct(ctx, subset, exponent)
