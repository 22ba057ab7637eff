"""Declarative per-parameter data: inducing domains, cell partitions, scaling
maps, substitutions, shift tables and witness orbits.

Each parameter has one data module (`g_gamma.py`, ...) holding a plain `DATA`
dict whose numeric entries are ints, strings in the exact text grammar of
:mod:`quadtorus.qfield`, or `QuadElem` values.  This package compiles those
dicts into immutable `CaseData` objects with exact membership predicates, both
over `QuadElem` points and over the integer coordinates of fast orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from ..dynamics import FastOrbit, LambdaCase, Point, get_case
from ..qfield import QuadElem, parse
from ..subst import Substitution, Word

_REL_SIGNS = {"<": (-1,), "<=": (-1, 0), "=": (0,), ">=": (0, 1), ">": (1,)}


def _coerce(v) -> QuadElem:
    if isinstance(v, QuadElem):
        return v
    if isinstance(v, str):
        return parse(v)
    if isinstance(v, Fraction):
        return QuadElem.from_fraction(v)
    if isinstance(v, int):
        return QuadElem.from_int(v)
    raise TypeError(f"cannot coerce {v!r} to QuadElem")


def _coerce_point(p) -> Point:
    x, y = p
    return (_coerce(x), _coerce(y))


def _sign_quad(ea: int, eb: int, d: int) -> int:
    """Sign of ea + eb*sqrt(d) using integer arithmetic only."""
    if eb == 0:
        return (ea > 0) - (ea < 0)
    if ea == 0:
        return 1 if eb > 0 else -1
    if ea > 0 and eb > 0:
        return 1
    if ea < 0 and eb < 0:
        return -1
    lhs = ea * ea
    rhs = eb * eb * d
    if ea > 0:  # eb < 0
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


@dataclass(frozen=True)
class HalfPlane:
    """The relation p*x + q*y REL r, evaluated exactly."""

    p: QuadElem
    q: QuadElem
    rel: str
    r: QuadElem

    def holds(self, z: Point) -> bool:
        e = self.p * z[0] + self.q * z[1] - self.r
        return e.sign() in _REL_SIGNS[self.rel]

    def compile_fast(self, c: int, d: int) -> Callable[[int, int, int, int], bool]:
        """Predicate over fast-orbit numerators (ax, bx, ay, by) at denominator c."""
        pa, pb, pq = self.p.a, self.p.b, self.p.q
        qa, qb, qq = self.q.a, self.q.b, self.q.q
        ra, rb, rq = self.r.a, self.r.b, self.r.q
        m0 = math.lcm(pq, qq, rq)
        kp, kq, kr = m0 // pq, m0 // qq, (m0 // rq) * c
        signs = _REL_SIGNS[self.rel]

        def holds(ax: int, bx: int, ay: int, by: int) -> bool:
            ea = (pa * ax + pb * bx * d) * kp + (qa * ay + qb * by * d) * kq - ra * kr
            eb = (pa * bx + pb * ax) * kp + (qa * by + qb * ay) * kq - rb * kr
            return _sign_quad(ea, eb, d) in signs

        return holds


Region = tuple[tuple[HalfPlane, ...], ...]  # disjunction of conjunctions


def _compile_region(region: Region, c: int, d: int) -> Callable[[int, int, int, int], bool]:
    compiled = tuple(tuple(h.compile_fast(c, d) for h in conj) for conj in region)

    def member(ax: int, bx: int, ay: int, by: int) -> bool:
        return any(all(h(ax, bx, ay, by) for h in conj) for conj in compiled)

    return member


@dataclass(frozen=True)
class Cell:
    label: str
    constraints: tuple[HalfPlane, ...]
    tau: frozenset[int] | None  # admissible first-return times, None if unknown here
    sampler: tuple | None  # ("box", p0, p1) | ("segment", p0, p1) | ("point", p)

    def contains(self, z: Point) -> bool:
        return all(h.holds(z) for h in self.constraints)


@dataclass(frozen=True)
class ScalingMap:
    """V(z) = c*(z - v) componentwise; U(z) = v + kappa*(z - v)."""

    kappa: QuadElem
    v: Point
    c: QuadElem

    def V(self, z: Point) -> Point:
        return (self.c * (z[0] - self.v[0]), self.c * (z[1] - self.v[1]))

    def V_inv(self, z: Point) -> Point:
        return (self.v[0] + z[0] / self.c, self.v[1] + z[1] / self.c)

    def U(self, z: Point) -> Point:
        return (
            self.v[0] + self.kappa * (z[0] - self.v[0]),
            self.v[1] + self.kappa * (z[1] - self.v[1]),
        )

    def U_inv(self, z: Point) -> Point:
        return (
            self.v[0] + (z[0] - self.v[0]) / self.kappa,
            self.v[1] + (z[1] - self.v[1]) / self.kappa,
        )


@dataclass(frozen=True)
class Witness:
    z: Point  # aperiodic point, direct coordinates
    cycle: tuple[Point, ...]  # expected S-orbit cycle starting at R(z)
    coords: str  # "direct" or "V": coordinate frame of `cycle`


@dataclass(frozen=True)
class DomainData:
    id: int
    region: Region
    exclude: tuple[Point, ...]
    cells: tuple[Cell, ...]
    cell_coords: str  # "direct" or "V"
    scaling: ScalingMap
    epsilon: int
    delta: QuadElem
    subst: Substitution
    shat: Mapping[tuple[str, int], int]
    t_table: Mapping[tuple[str, int], tuple[int | None, Point]]
    witness: Witness | None
    search_bound: int  # locate searches 1 <= k < search_bound

    def contains(self, z: Point) -> bool:
        x, y = z
        if x.sign() < 0 or y.sign() < 0 or (x - 1).sign() >= 0 or (y - 1).sign() >= 0:
            return False
        if any(all(h.holds(z) for h in conj) for conj in self.region):
            return all(z != p for p in self.exclude)
        return False

    def cell_frame(self, z: Point) -> Point:
        return self.scaling.V(z) if self.cell_coords == "V" else z

    def cell_of(self, z: Point) -> Cell | None:
        if not self.contains(z):
            return None
        w = self.cell_frame(z)
        for cell in self.cells:
            if cell.contains(w):
                return cell
        return None

    def shat_for(self, label: str, k: int) -> int:
        if k == 0:
            return 0
        return self.shat.get((label, k), -self.epsilon * k)


@dataclass(frozen=True)
class PeriodRow:
    """One row of a minimal-period table.

    Constant rows carry ``period`` and representative ``points``.  Leveled
    rows carry a closed-form ``formula`` in the renormalization level n and
    a ``base`` point whose n-fold image under the scaling map U represents
    the row at level n.
    """

    label: str
    period: int | None = None
    points: tuple[Point, ...] = ()
    formula: Callable[[int], int] | None = None
    base: Point | None = None


@dataclass(frozen=True)
class CaseData:
    case: LambdaCase
    domains: tuple[DomainData, ...]
    r_budget: int
    return_budget: int
    period_rows: tuple[PeriodRow, ...] = ()
    extras: Mapping[str, object] = field(default_factory=dict)

    def in_domain(self, z: Point) -> DomainData | None:
        for dom in self.domains:
            if dom.contains(z):
                return dom
        return None

    def domain(self, domain_id: int) -> DomainData:
        for dom in self.domains:
            if dom.id == domain_id:
                return dom
        raise KeyError(domain_id)

    def compile_membership(self, orbit: FastOrbit) -> Callable[[], DomainData | None]:
        """Membership test over a fast orbit's integer coordinates."""
        c, d = orbit.c, orbit.d
        members = [(dom, _compile_region(dom.region, c, d)) for dom in self.domains]
        excl = [
            (dom, (p[0].a * (c // p[0].q), p[0].b * (c // p[0].q),
                   p[1].a * (c // p[1].q), p[1].b * (c // p[1].q)))
            for dom in self.domains
            for p in dom.exclude
            if c % p[0].q == 0 and c % p[1].q == 0
            and (p[0].d in (None, d)) and (p[1].d in (None, d))
        ]

        def which() -> DomainData | None:
            ax, bx, ay, by = orbit.ax, orbit.bx, orbit.ay, orbit.by
            for dom, member in members:
                if member(ax, bx, ay, by):
                    for dom2, coords in excl:
                        if dom2 is dom and coords == (ax, bx, ay, by):
                            return None
                    return dom
            return None

        return which


def _build_halfplane(spec) -> HalfPlane:
    p, q, rel, r = spec
    if rel not in _REL_SIGNS:
        raise ValueError(f"bad relation {rel!r}")
    return HalfPlane(_coerce(p), _coerce(q), rel, _coerce(r))


def _build_cell(spec) -> Cell:
    tau = spec.get("tau")
    if tau is not None:
        tau = frozenset([tau] if isinstance(tau, int) else tau)
    sampler = spec.get("sampler")
    if sampler is not None:
        kind = sampler[0]
        if kind in ("box", "segment"):
            sampler = (kind, _coerce_point(sampler[1]), _coerce_point(sampler[2]))
        elif kind == "point":
            sampler = (kind, _coerce_point(sampler[1]))
        else:
            raise ValueError(f"bad sampler kind {kind!r}")
    return Cell(
        label=str(spec["label"]),
        constraints=tuple(_build_halfplane(h) for h in spec.get("constraints", ())),
        tau=tau,
        sampler=sampler,
    )


def _build_domain(spec) -> DomainData:
    scaling = ScalingMap(
        kappa=_coerce(spec["scaling"]["kappa"]),
        v=_coerce_point(spec["scaling"].get("v", (0, 0))),
        c=_coerce(spec["scaling"].get("c", 1)),
    )
    subst = Substitution({str(k): tuple(v) for k, v in spec["subst"].items()})
    witness = None
    if "witness" in spec:
        w = spec["witness"]
        witness = Witness(
            z=_coerce_point(w["z"]),
            cycle=tuple(_coerce_point(p) for p in w["cycle"]),
            coords=w.get("coords", "direct"),
        )
    t_table = {
        (str(label), int(k)): (s, _coerce_point(t))
        for (label, k), (s, t) in spec.get("t_table", {}).items()
    }
    return DomainData(
        id=int(spec.get("id", 1)),
        region=tuple(tuple(_build_halfplane(h) for h in conj) for conj in spec["region"]),
        exclude=tuple(_coerce_point(p) for p in spec.get("exclude", ())),
        cells=tuple(_build_cell(c) for c in spec["cells"]),
        cell_coords=spec.get("cell_coords", "direct"),
        scaling=scaling,
        epsilon=int(spec["epsilon"]),
        delta=_coerce(spec["delta"]),
        subst=subst,
        shat={(str(label), int(k)): int(v) for (label, k), v in spec.get("shat", {}).items()},
        t_table=t_table,
        witness=witness,
        search_bound=int(spec.get("search_bound", subst.max_image_length())),
    )


def _build_case(data) -> CaseData:
    extras = dict(data.get("extras", {}))
    if "letter_cells" in extras:
        extras["letter_cells"] = {
            int(dom_id): tuple(_build_cell(c) for c in cells)
            for dom_id, cells in extras["letter_cells"].items()
        }
    if "sigma2" in extras:
        extras["sigma2"] = Substitution(
            {str(k): tuple(v) for k, v in extras["sigma2"].items()}
        )
    rows = tuple(
        PeriodRow(
            label=row["label"],
            period=row.get("period"),
            points=tuple(_coerce_point(p) for p in row.get("points", ())),
            formula=row.get("formula"),
            base=_coerce_point(row["base"]) if "base" in row else None,
        )
        for row in data.get("period_rows", ())
    )
    return CaseData(
        case=get_case(data["tag"]),
        domains=tuple(_build_domain(d) for d in data["domains"]),
        r_budget=int(data["r_budget"]),
        return_budget=int(data["return_budget"]),
        period_rows=rows,
        extras=extras,
    )


_DATA_MODULES = {
    "gamma": "g_gamma",
    "neg_inv_gamma": "g_neg_inv_gamma",
    "inv_gamma": "g_inv_gamma",
    "neg_gamma": "g_neg_gamma",
    "sqrt2": "g_sqrt2",
    "neg_sqrt2": "g_neg_sqrt2",
    "sqrt3": "g_sqrt3",
    "neg_sqrt3": "g_neg_sqrt3",
}


@lru_cache(maxsize=None)
def load_case(tag: str) -> CaseData:
    tag = tag.replace("-", "_")
    if tag not in _DATA_MODULES:
        raise KeyError(f"unknown parameter tag {tag!r}")
    import importlib

    mod = importlib.import_module(f".{_DATA_MODULES[tag]}", __name__)
    built = _build_case(mod.DATA)
    assert built.case.tag == tag
    return built


def all_tags() -> tuple[str, ...]:
    return tuple(_DATA_MODULES)
