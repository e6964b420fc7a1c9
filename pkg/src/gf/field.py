"""
Finite field contexts.

A FieldCtx wraps a galois FieldArray class built over the canonical modulus:
the lexicographically smallest monic irreducible polynomial of degree m over
GF(p), coefficients compared from c_0 upwards. Elements are galois arrays whose
integer view is the base-p code sum(c_i * p**i) of the polynomial-basis
coordinates.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

import galois
import numpy as np
import structlog

from src.core.config import get_settings
from src.core.exceptions import FieldDomainError, FieldParameterError

logger = structlog.get_logger(__name__)

# A FieldElem is a 0-d FieldArray; vectors and matrices are 1-d / 2-d FieldArrays.
FieldElem = galois.FieldArray


@dataclass(frozen=True)
class FieldCtx:
    """GF(p^m) with its canonical modulus."""

    p: int
    m: int
    modulus: tuple[int, ...]  # low-to-high, monic, length m + 1
    GF: type[galois.FieldArray] = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def is_even(self) -> bool:
        return self.p == 2

    def __call__(self, values) -> galois.FieldArray:
        """Wrap integer codes (scalar, sequence or ndarray) as field elements."""
        array = np.asarray(values, dtype=np.int64)
        if array.size and (array.min() < 0 or array.max() >= self.q):
            raise FieldDomainError(
                f"element code outside [0, {self.q})",
                {"field": self.name, "codes": array.tolist()}
            )
        return self.GF(array)

    def zero(self) -> FieldElem:
        return self.GF(0)

    def one(self) -> FieldElem:
        return self.GF(1)

    def elements(self) -> galois.FieldArray:
        """All q elements in code order."""
        return self.GF.elements

    @property
    def name(self) -> str:
        return f"GF({self.p}^{self.m})"

    def describe(self) -> str:
        return f"{self.name} modulus {list(self.modulus)}"


def codes(values: galois.FieldArray) -> np.ndarray:
    """Integer codes of a FieldArray as a plain int64 ndarray."""
    return np.asarray(values.view(np.ndarray), dtype=np.int64)


def field_create(p: int, m: int) -> FieldCtx:
    """
    Create GF(p^m) with its canonical modulus.

    Raises FieldParameterError for a non-prime p, m < 1, or q above
    the configured bound.
    """
    if not isinstance(p, (int, np.integer)) or p < 2 or not galois.is_prime(int(p)):
        raise FieldParameterError("characteristic must be prime", {"p": p})
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise FieldParameterError("extension degree must be at least 1", {"m": m})
    limit = get_settings().max_field_order
    if p ** m > limit:
        raise FieldParameterError(
            "field order above bound",
            {"p": p, "m": m, "q": p ** m, "max_field_order": limit}
        )
    return _build_field(int(p), int(m))


def field_from_order(q: int) -> FieldCtx:
    """Create GF(q) from the order alone."""
    if q < 2:
        raise FieldParameterError("field order must be at least 2", {"q": q})
    primes, exponents = galois.factors(int(q))
    if len(primes) != 1:
        raise FieldParameterError("field order must be a prime power", {"q": q})
    return field_create(int(primes[0]), int(exponents[0]))


@lru_cache(maxsize=None)
def _build_field(p: int, m: int) -> FieldCtx:
    if m == 1:
        modulus: tuple[int, ...] = (0, 1)
        GF = galois.GF(p)
    else:
        modulus = canonical_modulus(p, m)
        prime_field = galois.GF(p)
        GF = galois.GF(
            p ** m,
            irreducible_poly=galois.Poly(list(modulus), field=prime_field, order="asc"),
            verify=False
        )
    logger.debug("field_created", p=p, m=m, modulus=list(modulus))
    return FieldCtx(p=p, m=m, modulus=modulus, GF=GF)


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, comparing (c_0, ..., c_{m-1})."""
    prime_field = galois.GF(p)
    divisors = [
        galois.Poly(list(tail) + [1], field=prime_field, order="asc")
        for degree in range(2, m // 2 + 1)
        for tail in product(range(p), repeat=degree)
    ]
    for tail in product(range(p), repeat=m):
        if tail[0] == 0:
            continue
        candidate = galois.Poly(list(tail) + [1], field=prime_field, order="asc")
        if _has_linear_factor(candidate, prime_field):
            continue
        if any(_divides(divisor, candidate) for divisor in divisors):
            continue
        return tuple(tail) + (1,)
    raise FieldParameterError("no irreducible polynomial found", {"p": p, "m": m})


def _divides(divisor: galois.Poly, poly: galois.Poly) -> bool:
    remainder = poly % divisor
    return remainder.degree == 0 and int(remainder.coeffs[0]) == 0


def _has_linear_factor(poly: galois.Poly, prime_field) -> bool:
    return bool(np.any(poly(prime_field.elements) == 0))


def field_inv(a: FieldElem) -> FieldElem:
    """Multiplicative inverse; FieldDomainError for 0."""
    if np.any(a == 0):
        raise FieldDomainError("zero has no inverse", {"value": codes(a).tolist()})
    return a ** -1


def power(values: galois.FieldArray, exponent: int) -> galois.FieldArray:
    """Elementwise power with the 0**0 = 1 convention."""
    if exponent == 0:
        return type(values).Ones(np.shape(values))
    return values ** exponent


def powers_matrix(points: galois.FieldArray, count: int) -> galois.FieldArray:
    """Rows points**0, ..., points**(count-1) built by cumulative products."""
    GF = type(points)
    rows = GF.Zeros((count, points.size))
    if count == 0:
        return rows
    rows[0] = GF.Ones(points.size)
    for i in range(1, count):
        rows[i] = rows[i - 1] * points
    return rows


def power_sum(ctx: FieldCtx, exponent: int) -> FieldElem:
    """Sum of x**exponent over all of GF(q)."""
    return np.add.reduce(power(ctx.elements(), exponent))


def field_trace(a: galois.FieldArray, r: int) -> galois.FieldArray:
    """
    Relative trace Tr_r^m(a) = a^{p^{m-r}} + ... + a^{p^r} + a.

    Works elementwise; the result lies in the embedded subfield GF(p^r).
    """
    GF = type(a)
    p, m = GF.characteristic, GF.degree
    if r < 1 or m % r != 0:
        raise FieldParameterError("trace degree must divide m", {"m": m, "r": r})
    total = GF.Zeros(np.shape(a))
    for i in range(m // r):
        total = total + a ** (p ** (i * r))
    return total


def in_subfield(a: galois.FieldArray, r: int) -> np.ndarray:
    """Elementwise membership in the embedded GF(p^r)."""
    GF = type(a)
    return np.asarray(a ** (GF.characteristic ** r) == a)


def field_generator(ctx: FieldCtx) -> FieldElem:
    """Multiplicative generator with the smallest code."""
    q = ctx.q
    if q == 2:
        return ctx.one()
    primes, _ = galois.factors(q - 1)
    candidates = ctx.GF(np.arange(1, q))
    mask = np.ones(q - 1, dtype=bool)
    for prime in primes:
        mask &= np.asarray(candidates ** ((q - 1) // int(prime)) != 1)
    return candidates[int(np.argmax(mask))]


def subfield_generator(ctx: FieldCtx, r: int) -> FieldElem:
    """Generator of the embedded GF(p^r)^*, as G**((q-1)/(p^r-1))."""
    if r < 1 or ctx.m % r != 0:
        raise FieldParameterError("subfield degree must divide m", {"m": ctx.m, "r": r})
    return field_generator(ctx) ** ((ctx.q - 1) // (ctx.p ** r - 1))


def element_poly(ctx: FieldCtx, value: int) -> str:
    """Polynomial-basis text for an element code, e.g. 'x^2 + 2x + 1'."""
    digits = [(value // ctx.p ** i) % ctx.p for i in range(ctx.m)]
    terms = []
    for degree in range(ctx.m - 1, -1, -1):
        c = digits[degree]
        if c == 0:
            continue
        coefficient = "" if (c == 1 and degree > 0) else str(c)
        if degree == 0:
            terms.append(str(c))
        elif degree == 1:
            terms.append(f"{coefficient}x")
        else:
            terms.append(f"{coefficient}x^{degree}")
    return " + ".join(terms) if terms else "0"


def element_table(ctx: FieldCtx) -> list[tuple[int, str]]:
    """Element code to polynomial text, in code order."""
    return [(value, element_poly(ctx, value)) for value in range(ctx.q)]


def parse_codes(text: str | Sequence[int]) -> list[int]:
    """Parse '1,2,3' (or an int sequence) into element codes."""
    if isinstance(text, str):
        parts = [part.strip() for part in text.split(",") if part.strip()]
        return [int(part) for part in parts]
    return [int(value) for value in text]
