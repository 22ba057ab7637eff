"""Exact random sampling of cell interiors for the verification suites.

Samples are rational convex combinations of exact anchor points, so every
sampled point has coordinates in the right quadratic field and all membership
tests stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .cases import CaseData, Cell, DomainData
from .dynamics import Point
from .qfield import QuadElem

_MAX_ATTEMPTS = 20000


def _rand_fraction(rng: Random) -> Fraction:
    den = rng.choice((64, 81, 125, 243, 343, 1024))
    return Fraction(rng.randrange(1, den), den)


def sample_cell(
    cd: CaseData, dom: DomainData, cell: Cell, count: int, rng: Random
) -> list[Point]:
    """`count` exact points of the cell (direct coordinates), uniform-ish."""
    kind = cell.sampler[0]
    if kind == "point":
        (pt,) = cell.sampler[1:]
        z = _to_direct(dom, pt)
        if dom.cell_of(z) is not cell:
            raise RuntimeError(f"stored point of cell {cell.label!r} fails membership")
        return [z]
    p0, p1 = cell.sampler[1:]
    out: list[Point] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > _MAX_ATTEMPTS:
            raise RuntimeError(
                f"cell {cell.label!r}: only {len(out)} samples in {attempts} attempts"
            )
        if kind == "box":
            tx, ty = _rand_fraction(rng), _rand_fraction(rng)
            frame = (
                p0[0] + tx * (p1[0] - p0[0]),
                p0[1] + ty * (p1[1] - p0[1]),
            )
        else:  # segment
            t = _rand_fraction(rng)
            frame = (
                p0[0] + t * (p1[0] - p0[0]),
                p0[1] + t * (p1[1] - p0[1]),
            )
        if not cell.contains(frame):
            continue
        z = _to_direct(dom, frame)
        if not dom.contains(z) or dom.cell_of(z) is not cell:
            continue
        out.append(z)
    return out


def _to_direct(dom: DomainData, frame: Point) -> Point:
    return dom.scaling.V_inv(frame) if dom.cell_coords == "V" else frame


def grid_points(case_d: int | None, q: int) -> list[Point]:
    """All points of the (1/q) integer grid in [0,1)^2 (rational coordinates)."""
    pts = []
    for i in range(q):
        for j in range(q):
            pts.append((QuadElem.rational(i, q), QuadElem.rational(j, q)))
    return pts
