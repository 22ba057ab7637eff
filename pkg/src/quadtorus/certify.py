"""Finite certification at a fixed denominator Q.

Every aperiodic point of the map must, after finitely many steps, enter the
inducing domain with all its renormalization iterates; the translation-vector
bookkeeping bounds the conjugate of each such point by the per-domain
constant delta.  Consequently, the points of (1/Q)Z[lambda]^2 in the domain
whose conjugates respect that bound form a finite candidate set: deciding all
of them certifies the denominator-Q restriction of the periodicity
conjecture, or exhibits explicit aperiodic points.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from .cases import CaseData, DomainData
from .dynamics import Point
from .qfield import QuadElem
from .renorm import DataError, Verdict, decide
from .sampling import grid_points

_ENUM_SLACK = 2  # loop-box margin (integer units) beyond the float estimate


def _float(x: QuadElem) -> float:
    root = math.sqrt(x.d) if x.d is not None else 0.0
    return (x.a + x.b * root) / x.q


def _coord_key(x: QuadElem):
    return (_float(x), x.a, x.b, x.q)


def point_key(z: Point):
    return (_coord_key(z[0]), _coord_key(z[1]))


def _conjugate_interval(dom: DomainData, i: int) -> tuple[QuadElem, QuadElem]:
    """Exact interval [lo, hi] that the conjugate of coordinate i must lie in.

    The bound |(V(z))'| <= delta per coordinate, with V(z) = c(z - v),
    reads |c'| |w' - v'| <= delta.
    """
    c = dom.scaling.c.conj()
    v = dom.scaling.v[i].conj()
    radius = dom.delta / (c if c.sign() > 0 else -c)
    return v - radius, v + radius


def coordinate_candidates(
    dom: DomainData, d: int | None, Q: int, slack: int = _ENUM_SLACK
) -> dict[int, list[QuadElem]]:
    """Per-coordinate lists of admissible values w = (a+b*sqrt(d))/(m*Q).

    m = 2 with a = b (mod 2) when d = 5 (the ring generated by the golden
    mean is half-integral), m = 1 otherwise.  Admissible means w in [0,1)
    and the conjugate of V applied to that coordinate bounded by delta.
    The integer loop box is estimated in floating point and padded by
    ``slack``; every candidate is then checked with exact arithmetic, so
    the float estimate only needs to be a superset.
    """
    if d is None:
        raise ValueError("the candidate lattice requires a quadratic field")
    m = 2 if d == 5 else 1
    n = m * Q
    root = math.sqrt(d)
    out: dict[int, list[QuadElem]] = {}
    for i in (0, 1):
        lo, hi = _conjugate_interval(dom, i)
        flo, fhi = _float(lo), _float(hi)
        # a + b*sqrt(d) in [0, n), a - b*sqrt(d) in [n*lo, n*hi]
        a_min = math.floor((0 + n * flo) / 2) - slack
        a_max = math.ceil((n + n * fhi) / 2) + slack
        found = []
        for a in range(a_min, a_max + 1):
            # b*sqrt(d) in [-a, n-a) from w in [0,1); a - b*sqrt(d) in
            # [n*lo, n*hi] from the conjugate bound; intersect both
            b_min = math.floor(max(-a, a - n * fhi) / root) - slack
            b_max = math.ceil(min(n - a, a - n * flo) / root) + slack
            for b in range(b_min, b_max + 1):
                if m == 2 and (a - b) % 2 != 0:
                    continue
                w = QuadElem(a, b, n, d)
                if w.sign() < 0 or (w - 1).sign() >= 0:
                    continue
                wc = w.conj()
                if (wc - lo).sign() < 0 or (hi - wc).sign() < 0:
                    continue
                found.append(w)
        found.sort(key=_coord_key)
        out[i] = found
    return out


def enumerate_candidates(
    cd: CaseData, dom: DomainData, Q: int, slack: int = _ENUM_SLACK
) -> list[Point]:
    """All z in (1/Q)Z[lambda]^2 in this domain with the conjugate of V(z)
    bounded by delta in the sup norm, sorted canonically."""
    coords = coordinate_candidates(dom, cd.case.lam.d, Q, slack)
    pts = [
        (x, y) for x in coords[0] for y in coords[1] if dom.contains((x, y))
    ]
    pts.sort(key=point_key)
    return pts


@dataclass(frozen=True)
class CandidateResult:
    domain_id: int
    point: Point
    verdict: Verdict


@dataclass(frozen=True)
class Certificate:
    case: str
    Q: int
    deltas: dict[int, QuadElem]  # per domain id
    results: tuple[CandidateResult, ...]
    conclusion: str  # "all-periodic" | "aperiodic-found"
    provenance: dict

    def aperiodic_points(self) -> list[Point]:
        return [r.point for r in self.results if r.verdict.kind == "aperiodic"]


def _check_cycle_bound(dom: DomainData, verdict: Verdict) -> None:
    """Every point of an aperiodic S-cycle must respect the delta bound."""
    if verdict.kind != "aperiodic":
        return
    v = dom.scaling.V
    for w in verdict.cycle:
        img = v(w)
        for coord in img:
            cc = coord.conj()
            mag = cc if cc.sign() >= 0 else -cc
            if (mag - dom.delta).sign() > 0:
                raise DataError(
                    "aperiodic cycle point exceeds the stored conjugate bound"
                )


def certify_Q(cd: CaseData, Q: int, threads: int = 1) -> Certificate:
    """Decide every candidate point of denominator Q, over all domains."""
    jobs: list[tuple[DomainData, Point]] = []
    for dom in cd.domains:
        for z in enumerate_candidates(cd, dom, Q):
            jobs.append((dom, z))

    def run(job: tuple[DomainData, Point]) -> CandidateResult:
        dom, z = job
        verdict = decide(cd, z)
        _check_cycle_bound(dom, verdict)
        return CandidateResult(domain_id=dom.id, point=z, verdict=verdict)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = tuple(pool.map(run, jobs))
    else:
        results = tuple(run(job) for job in jobs)
    conclusion = (
        "all-periodic"
        if all(r.verdict.kind == "periodic" for r in results)
        else "aperiodic-found"
    )
    return Certificate(
        case=cd.case.tag,
        Q=Q,
        deltas={dom.id: dom.delta for dom in cd.domains},
        results=results,
        conclusion=conclusion,
        provenance={
            "package": "quadtorus",
            "version": __version__,
            "budgets": {
                "r_budget": cd.r_budget,
                "return_budget": cd.return_budget,
            },
        },
    )


def _point_text(z: Point) -> list[str]:
    return [str(z[0]), str(z[1])]


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "case": cert.case,
        "Q": cert.Q,
        "deltas": {str(k): str(v) for k, v in sorted(cert.deltas.items())},
        "conclusion": cert.conclusion,
        "provenance": cert.provenance,
        "candidates": [
            {
                "domain": r.domain_id,
                "point": _point_text(r.point),
                "verdict": r.verdict.kind,
                "period": r.verdict.period,
                "via": r.verdict.via,
                "cycle": [_point_text(w) for w in r.verdict.cycle],
            }
            for r in cert.results
        ],
    }


def certificate_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class PeriodRowResult:
    label: str
    representative: Point
    level: int | None  # None for constant rows
    expected: int
    computed: int | None
    brute: int | None  # brute-force confirmation when expected <= brute_cap

    @property
    def ok(self) -> bool:
        return self.computed == self.expected and (
            self.brute is None or self.brute == self.expected
        )


def period_table(
    cd: CaseData, n_max: int = 3, brute_cap: int = 10**6
) -> list[PeriodRowResult]:
    """Evaluate every stored minimal-period row.

    Constant rows are decided at each stored representative.  Leveled rows
    are decided at U^n(base) for n = 0..n_max and compared with the closed
    form.  Whenever the expected period is at most ``brute_cap``, direct
    orbit iteration confirms it independently of the renormalization
    machinery.
    """
    if not cd.period_rows:
        raise ValueError(f"no period table stored for case {cd.case.tag}")
    out: list[PeriodRowResult] = []
    scaling = cd.domains[0].scaling
    for row in cd.period_rows:
        if row.period is not None:
            for z in row.points:
                verdict = decide(cd, z)
                brute = (
                    cd.case.brute_period(z, row.period + 1)
                    if row.period <= brute_cap
                    else None
                )
                out.append(
                    PeriodRowResult(row.label, z, None, row.period, verdict.period, brute)
                )
        else:
            z = row.base
            for n in range(n_max + 1):
                expected = row.formula(n)
                verdict = decide(cd, z)
                brute = (
                    cd.case.brute_period(z, expected + 1)
                    if expected <= brute_cap
                    else None
                )
                out.append(
                    PeriodRowResult(row.label, z, n, expected, verdict.period, brute)
                )
                z = scaling.U(z)
    return out


def scan_aperiodic(
    cd: CaseData, Q: int, region=None, threads: int = 1
) -> list[tuple[Point, str, int | None]]:
    """Classify every point of the (1/Q)-grid; rows (point, kind, period).

    ``region`` may be a predicate on points; None scans the whole square.
    """
    pts = [z for z in grid_points(cd.case.lam.d, Q) if region is None or region(z)]
    pts.sort(key=point_key)

    def run(z: Point) -> tuple[Point, str, int | None]:
        verdict = decide(cd, z)
        return (z, verdict.kind, verdict.period)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run, pts))
    return [run(z) for z in pts]
