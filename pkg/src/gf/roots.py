"""
Square roots in GF(q).

Even q: the unique root a^(q/2). Odd q: galois decides squareness, then a
lookup table (small q) or galois' own square root finds a root, and the root
with the smaller code is returned.
"""
from functools import lru_cache
from typing import Optional

import numpy as np

from src.core.config import get_settings
from src.gf.field import FieldCtx, FieldElem, codes


def is_square(a: FieldElem) -> bool:
    return bool(a.is_square())


def field_sqrt(a: FieldElem) -> Optional[FieldElem]:
    """
    Canonical square root of a, or None when a is a non-square.

    For odd q the two roots r and -r are compared by code and the smaller
    one is returned.
    """
    GF = type(a)
    q = GF.order
    if int(a) == 0:
        return GF(0)
    if q % 2 == 0:
        return a ** (q // 2)
    if not is_square(a):
        return None
    if q <= get_settings().sqrt_table_limit:
        return GF(_square_root_table(GF)[int(a)])
    root = np.sqrt(np.atleast_1d(a))[0]
    return GF(min(int(root), int(-root)))


@lru_cache(maxsize=None)
def _square_root_table(GF) -> dict[int, int]:
    """Square code -> smallest root code."""
    elements = GF.elements
    squares = codes(elements * elements)
    table: dict[int, int] = {}
    for root, square in enumerate(squares.tolist()):
        table.setdefault(square, root)
    return table


def sqrt_vector(ctx: FieldCtx, values) -> Optional[np.ndarray]:
    """Canonical roots of every entry, or None if any entry is a non-square."""
    roots = []
    for value in np.atleast_1d(values):
        root = field_sqrt(ctx.GF(int(value)))
        if root is None:
            return None
        roots.append(int(root))
    return ctx(roots)
