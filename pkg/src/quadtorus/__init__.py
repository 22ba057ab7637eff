"""Exact arithmetic and periodicity analysis for the piecewise affine torus
maps T(x, y) = (y, {-x - lam' y}) at eight quadratic parameters lam."""

from .qfield import QuadElem, parse
from .dynamics import CASES, CASE_TAGS, LambdaCase, Point, get_case, point

__all__ = [
    "QuadElem",
    "parse",
    "CASES",
    "CASE_TAGS",
    "LambdaCase",
    "Point",
    "get_case",
    "point",
]

__version__ = "0.1.0"
