"""Shared exact constants for the case data modules."""

from __future__ import annotations

from ..qfield import QuadElem

ONE = QuadElem.from_int(1)
ZERO = QuadElem.from_int(0)

SQRT2 = QuadElem(0, 1, 1, 2)
SQRT3 = QuadElem(0, 1, 1, 3)
SQRT5 = QuadElem(0, 1, 1, 5)
GAMMA = QuadElem(1, 1, 2, 5)  # (1 + sqrt 5)/2


def fr(p: int, q: int = 1) -> QuadElem:
    return QuadElem.rational(p, q)


def gpow(n: int) -> QuadElem:
    """gamma**n for any integer n."""
    return GAMMA**n
