"""Renormalization machinery: first-return maps, the scaled shift S with its
bookkeeping, the periodicity decision procedure, exact period lengths via
substitution counting, and kappa-expansion digits for aperiodic points.

The key structural fact used throughout: for each inducing (sub)domain with
scaling U, substitution sigma and orientation epsilon, the complement of the
residue set P decomposes as the disjoint union of That^(epsilon*k) U(D_ell)
over cells ell and 0 <= k < |sigma(ell)|.  Membership in P is therefore
decided by at most max |sigma(ell)| - 1 first-return steps in one direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .cases import CaseData, Cell, DomainData
from .dynamics import FastOrbit, Point, apply_matrix
from .qfield import QuadElem


class DataError(RuntimeError):
    """An exact computation contradicted the stored case data."""


@dataclass(frozen=True)
class ReturnStep:
    point: Point  # the returned point
    steps_T: int  # signed number of T-steps taken
    cell: str  # label of the cell the returned point lies in (or start cell)


@dataclass(frozen=True)
class SRecord:
    z: Point
    cell: str  # cell label located for z (of U^-1 of the hit)
    k: int  # z lies in That^(epsilon k) U(D_cell)
    s_hat: int
    s_T: int  # signed T-steps realizing That^(s_hat)
    t: Point  # translation V(T^s z) - V(z) A^s
    next: Point


@dataclass(frozen=True)
class Verdict:
    kind: str  # "periodic" | "aperiodic"
    period: int | None = None
    via: str = ""  # "R" | "P" | ""
    domain_id: int | None = None
    s_trajectory: tuple[SRecord, ...] = ()
    cycle_start: int | None = None  # aperiodic: index where the S-cycle re-enters
    p_hit: tuple[int, Point] | None = None  # periodic via P: (level n, point)

    @property
    def cycle(self) -> tuple[Point, ...]:
        if self.kind != "aperiodic":
            return ()
        pts = [rec.z for rec in self.s_trajectory]
        return tuple(pts[self.cycle_start :])


def _tau_map(dom: DomainData) -> Mapping[str, int] | None:
    out = {}
    for cell in dom.cells:
        if cell.tau is None or len(cell.tau) != 1:
            return None
        out[cell.label] = next(iter(cell.tau))
    return out


def _in_unit_square(z: Point) -> bool:
    x, y = z
    return x.sign() >= 0 and y.sign() >= 0 and (x - 1).sign() < 0 and (y - 1).sign() < 0


def first_return(cd: CaseData, dom: DomainData, z: Point, direction: int = 1) -> ReturnStep:
    """One step of the first-return map of T on dom (direction=-1: inverse)."""
    if not dom.contains(z):
        raise ValueError("first_return requires a point of the domain")
    orbit = FastOrbit(cd.case, z)
    member = _compiled_member(cd, dom, orbit)
    advance = orbit.step if direction >= 0 else orbit.step_inv
    for n in range(1, cd.return_budget + 1):
        advance()
        if member():
            w = orbit.to_point()
            cell = dom.cell_of(w if direction < 0 else z)
            if cell is None:
                cell = dom.cell_of(w)  # points of other-cells' closures
            if cell is not None and cell.tau is not None and n not in cell.tau:
                raise DataError(
                    f"return time {n} of cell {cell.label!r} not in {sorted(cell.tau)}"
                )
            label = cell.label if cell is not None else "?"
            return ReturnStep(w, n if direction >= 0 else -n, label)
    raise DataError(f"no return to the domain within {cd.return_budget} steps")


def _compiled_member(cd: CaseData, dom: DomainData, orbit: FastOrbit):
    """Fast membership predicate for a single domain at the orbit's denominator."""
    which = cd.compile_membership(orbit)

    def member() -> bool:
        found = which()
        return found is not None and found.id == dom.id

    return member


def iterate_return(cd: CaseData, dom: DomainData, z: Point, m: int) -> Point:
    for _ in range(abs(m)):
        z = first_return(cd, dom, z, 1 if m > 0 else -1).point
    return z


def r_phase(cd: CaseData, z: Point):
    """Forward-iterate T until the inducing domain is hit or z recurs.

    Returns ("reaches_D", r, point, dom) or ("in_R", minimal_period).
    """
    dom = cd.in_domain(z)
    if dom is not None:
        return ("reaches_D", 0, z, dom)
    orbit = FastOrbit(cd.case, z)
    which = cd.compile_membership(orbit)
    start = orbit.coords
    for n in range(1, cd.r_budget + 1):
        orbit.step()
        if orbit.coords == start:
            return ("in_R", n)
        found = which()
        if found is not None:
            return ("reaches_D", n, orbit.to_point(), found)
    raise DataError(f"orbit neither recurred nor hit the domain within {cd.r_budget} steps")


def in_scaled_domain(dom: DomainData, z: Point) -> bool:
    """Is z in U(D)?  Tested as U^-1(z) in D (U is injective)."""
    w = dom.scaling.U_inv(z)
    return _in_unit_square(w) and dom.contains(w)


def locate(cd: CaseData, dom: DomainData, z: Point):
    """Find (cell label ell, k) with z in That^(epsilon k) U(D_ell), or None if z in P.

    Searches k = 0, 1, ..., search_bound - 1 by first-return steps in the
    direction -epsilon; completeness follows from the disjoint decomposition
    of D minus P.
    """
    eps = dom.epsilon
    w = z
    for k in range(dom.search_bound):
        if in_scaled_domain(dom, w):
            inner = dom.scaling.U_inv(w)
            cell = dom.cell_of(inner)
            if cell is None:
                raise DataError("point of U(D) whose preimage matches no cell")
            if k >= len(dom.subst.images[cell.label]):
                raise DataError(
                    f"hit at k={k} exceeds |sigma({cell.label})|; cell data inconsistent"
                )
            return (cell.label, k)
        if k + 1 < dom.search_bound:
            w = first_return(cd, dom, w, -eps).point
    return None


def p_membership(cd: CaseData, dom: DomainData, z: Point) -> bool:
    return locate(cd, dom, z) is None


def s_map(cd: CaseData, dom: DomainData, z: Point, located=None) -> SRecord:
    """One renormalization step S(z) = U^-1(That^(s_hat)(z)) with exact bookkeeping."""
    if located is None:
        located = locate(cd, dom, z)
    if located is None:
        raise ValueError("s_map called on a point of P")
    label, k = located
    s_hat = dom.shat_for(label, k)
    w = z
    s_t = 0
    for _ in range(abs(s_hat)):
        step = first_return(cd, dom, w, 1 if s_hat > 0 else -1)
        w, s_t = step.point, s_t + step.steps_T
    if not in_scaled_domain(dom, w):
        raise DataError(f"That^{s_hat}(z) not in U(D) for cell {label!r}, k={k}")
    nxt = dom.scaling.U_inv(w)
    v = dom.scaling.V
    t_vec = _sub_points(v(w), apply_matrix(v(z), cd.case.matrix_power(s_t)))
    entry = dom.t_table.get((label, k))
    if entry is not None and s_hat == dom.shat_for(label, k):
        s_expected, t_expected = entry
        if t_vec != t_expected:
            raise DataError(
                f"translation mismatch for cell {label!r}, k={k}: "
                f"computed {t_vec}, stored {t_expected}"
            )
        if s_expected is not None and (s_t - s_expected) % cd.case.order != 0:
            raise DataError(
                f"step-count mismatch for cell {label!r}, k={k}: "
                f"{s_t} != {s_expected} mod {cd.case.order}"
            )
    return SRecord(z=z, cell=label, k=k, s_hat=s_hat, s_T=s_t, t=t_vec, next=nxt)


def _sub_points(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


_S_BUDGET = 4096


def decide(cd: CaseData, z: Point, memo: dict | None = None) -> Verdict:
    """Decide periodicity of the T-orbit of z exactly."""
    if memo is not None:
        cached = memo.get(z)
        if cached is not None:
            return cached
    verdict = _decide(cd, z)
    if memo is not None:
        memo[z] = verdict
    return verdict


def _decide(cd: CaseData, z: Point) -> Verdict:
    phase = r_phase(cd, z)
    if phase[0] == "in_R":
        return Verdict(kind="periodic", period=phase[1], via="R")
    _, _, w, dom = phase
    seen: dict[Point, int] = {}
    records: list[SRecord] = []
    for n in range(_S_BUDGET):
        if w in seen:
            return Verdict(
                kind="aperiodic",
                via="",
                domain_id=dom.id,
                s_trajectory=tuple(records),
                cycle_start=seen[w],
            )
        seen[w] = n
        located = locate(cd, dom, w)
        if located is None:
            period = _period_from_hit(cd, dom, w, n)
            return Verdict(
                kind="periodic",
                period=period,
                via="P",
                domain_id=dom.id,
                s_trajectory=tuple(records),
                p_hit=(n, w),
            )
        rec = s_map(cd, dom, w, located)
        records.append(rec)
        w = rec.next
    raise DataError("renormalization orbit neither recurred nor reached P")


def coding_word(cd: CaseData, dom: DomainData, w: Point, bound: int = 128) -> tuple[str, ...]:
    """The cell labels of w, That(w), ... up to the first return to w."""
    cell = dom.cell_of(w)
    if cell is None:
        raise ValueError("not a point of the domain")
    labels = [cell.label]
    u = first_return(cd, dom, w).point
    while u != w:
        if len(labels) >= bound:
            raise DataError("first-return orbit did not close up")
        c = dom.cell_of(u)
        if c is None:
            raise DataError("first-return orbit left the cell partition")
        labels.append(c.label)
        u = first_return(cd, dom, u).point
    return tuple(labels)


def _period_from_hit(cd: CaseData, dom: DomainData, w: Point, n: int) -> int | None:
    """Exact minimal period via tau(sigma^n(word)), when tau is constant per cell."""
    tau = _tau_map(dom)
    if tau is None or not dom.subst.is_endomorphism:
        return None
    word = coding_word(cd, dom, w)
    return dom.subst.weighted_length(word, n, tau)


def exact_period(cd: CaseData, verdict: Verdict) -> int | None:
    if verdict.kind != "periodic":
        raise ValueError("exact_period requires a periodic verdict")
    return verdict.period


def kappa_digits(cd: CaseData, z: Point, n: int) -> list[Point]:
    """First n digits of the kappa-expansion of V(z) for an aperiodic z.

    The identity V(z) = kappa^n V(S^n z) A^(-s_0-...-s_{n-1})
    + sum_k kappa^k d_k with digits d_k = -t_k A^(-s_0-...-s_k) is verified
    exactly before returning.
    """
    phase = r_phase(cd, z)
    if phase[0] == "in_R":
        raise ValueError("kappa_digits requires an aperiodic point")
    _, _, w, dom = phase
    if w != z:
        raise ValueError("kappa_digits requires a point of the inducing domain")
    kappa = dom.scaling.kappa
    digits: list[Point] = []
    s_sum = 0
    records: list[SRecord] = []
    for _ in range(n):
        located = locate(cd, dom, w)
        if located is None:
            raise ValueError("kappa_digits requires an aperiodic point")
        rec = s_map(cd, dom, w, located)
        records.append(rec)
        s_sum += rec.s_T
        digit = apply_matrix(rec.t, cd.case.matrix_power(-s_sum))
        digits.append((-digit[0], -digit[1]))
        w = rec.next
    # exact reconstruction check
    v = dom.scaling.V
    acc = apply_matrix(v(w), cd.case.matrix_power(-s_sum))
    acc = (acc[0] * kappa**n, acc[1] * kappa**n)
    kp = QuadElem.from_int(1)
    for digit in digits:
        acc = (acc[0] + kp * digit[0], acc[1] + kp * digit[1])
        kp = kp * kappa
    if acc != v(z):
        raise DataError("kappa-expansion reconstruction failed")
    return digits


def verify_witness(cd: CaseData, dom: DomainData) -> tuple[Point, ...]:
    """Check the stored aperiodic witness of a domain.

    The decision procedure must classify the witness aperiodic, and the
    S-cycle it finds must equal the stored cycle up to cyclic rotation
    (in the stored coordinate frame).  Returns the computed cycle.
    """
    w = dom.witness
    if w is None:
        raise ValueError(f"domain {dom.id} stores no witness")
    verdict = decide(cd, w.z)
    if verdict.kind != "aperiodic":
        raise DataError(f"witness not classified aperiodic: {verdict}")
    cycle = verdict.cycle
    if w.coords == "V":
        v = dom.scaling.V
        cycle = tuple(v(p) for p in cycle)
    m = len(cycle)
    if m != len(w.cycle):
        raise DataError(f"witness cycle length {m} != stored {len(w.cycle)}")
    for shift in range(m):
        if all(cycle[(shift + i) % m] == w.cycle[i] for i in range(m)):
            return cycle
    raise DataError("witness cycle differs from the stored cycle")


# -- substitution-condition audit -------------------------------------------


@dataclass
class AuditReport:
    domain_id: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures


def letter_of(cd: CaseData, dom: DomainData, z: Point) -> str:
    """Label of z in the partition used for reading substitution words."""
    letters = cd.extras.get("letter_cells")
    if letters is not None and dom.id in letters:
        w = dom.cell_frame(z)
        for cell in letters[dom.id]:
            if cell.contains(w):
                return cell.label
        raise DataError("point matches no letter cell")
    cell = dom.cell_of(z)
    if cell is None:
        raise DataError("point matches no cell")
    return cell.label


def check_substitution_at(
    cd: CaseData, dom: DomainData, z: Point, cell: Cell, *, endpoint: bool = True
) -> str | None:
    """Verify the inducing identity at one point; return an error string or None.

    With ``endpoint=False`` only the visited letter word is compared, for
    cells whose image codes the itinerary of a whole line segment without
    the pointwise conjugacy holding at each of its points.
    """
    eps = dom.epsilon
    image = dom.subst.images[cell.label]
    m = len(image)
    u = dom.scaling.U
    uz = u(z)
    orbit = [uz]
    w = uz
    for _ in range(m):
        w = first_return(cd, dom, w, eps).point
        orbit.append(w)
    if endpoint:
        for k in range(1, m):
            if in_scaled_domain(dom, orbit[k]):
                return f"cell {cell.label!r}: That^({eps}*{k})U(z) lies in U(D)"
        expected_end = u(first_return(cd, dom, z).point)
        if orbit[m] != expected_end:
            return f"cell {cell.label!r}: U(That(z)) != That^({eps}*{m})U(z)"
    if eps == 1:
        word = tuple(letter_of(cd, dom, orbit[k]) for k in range(m))
    else:
        word = tuple(letter_of(cd, dom, orbit[m - j]) for j in range(m))
    if word != image:
        return f"cell {cell.label!r}: visited word {''.join(word)} != {''.join(image)}"
    return None


def verify_substitution_conditions(
    cd: CaseData, dom: DomainData, samples: int, rng
) -> AuditReport:
    from .sampling import sample_cell

    report = AuditReport(domain_id=dom.id)
    word_only = cd.extras.get("word_only_labels", {}).get(dom.id, ())
    for cell in dom.cells:
        if cell.label not in dom.subst.images:
            continue  # isolated points without a substitution image
        for z in sample_cell(cd, dom, cell, samples, rng):
            err = check_substitution_at(
                cd, dom, z, cell, endpoint=cell.label not in word_only
            )
            report.checked += 1
            if err is not None:
                report.failures.append(err)
    return report
