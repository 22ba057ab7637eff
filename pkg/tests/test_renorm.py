"""Tests for the renormalization step, the decision procedure, and the audits."""

import random

import pytest

from quadtorus import sampling
from quadtorus.cases import all_tags, load_case
from quadtorus.dynamics import point
from quadtorus.renorm import (
    decide,
    first_return,
    in_scaled_domain,
    iterate_return,
    kappa_digits,
    locate,
    p_membership,
    r_phase,
    s_map,
    verify_substitution_conditions,
    verify_witness,
)

TAGS = all_tags()
ALL = {tag: load_case(tag) for tag in TAGS}


def sample_points(cd, dom, per_cell, seed):
    rng = random.Random(seed)
    out = []
    for cell in dom.cells:
        if cell.sampler is not None and cell.sampler[0] != "point":
            out.extend(sampling.sample_cell(cd, dom, cell, per_cell, rng))
    if cd.case.tag == "sqrt3":
        # return times up to 19459 steps: keep this unit file quick and leave
        # the exhaustive sweep to the acceptance suite
        out = out[:3]
    return out


@pytest.mark.parametrize("tag", TAGS)
def test_first_return_round_trip(tag):
    cd = ALL[tag]
    for dom in cd.domains:
        for z in sample_points(cd, dom, 2, 21)[:8]:
            step = first_return(cd, dom, z)
            assert dom.contains(step.point)
            assert cd.case.iterate(z, step.steps_T) == step.point
            back = first_return(cd, dom, step.point, -1)
            assert back.point == z
            assert back.steps_T == -step.steps_T
            assert iterate_return(cd, dom, iterate_return(cd, dom, z, 3), -3) == z


@pytest.mark.parametrize("tag", TAGS)
def test_locate_is_consistent(tag):
    cd = ALL[tag]
    for dom in cd.domains:
        for z in sample_points(cd, dom, 1, 22)[:6]:
            located = locate(cd, dom, z)
            if located is None:
                assert p_membership(cd, dom, z)
                continue
            label, k = located
            # pull back k first-return steps against the scaling orientation
            w = iterate_return(cd, dom, z, -dom.epsilon * k) if k else z
            assert in_scaled_domain(dom, w)
            inner = dom.scaling.U_inv(w)
            assert dom.cell_of(inner).label == label


@pytest.mark.parametrize("tag", TAGS)
def test_s_map_conjugacy_identities(tag):
    cd = ALL[tag]
    from quadtorus.dynamics import apply_matrix

    for dom in cd.domains:
        for z in sample_points(cd, dom, 1, 23)[:6]:
            located = locate(cd, dom, z)
            if located is None:
                continue
            rec = s_map(cd, dom, z, located)
            # the renormalized point pulls back through U
            assert cd.case.iterate(z, rec.s_T) == dom.scaling.U(rec.next)
            # affine bookkeeping: V(T^s z) = V(z) A^s + t
            v = dom.scaling.V
            lhs = v(cd.case.iterate(z, rec.s_T))
            rhs = apply_matrix(v(z), cd.case.matrix_power(rec.s_T))
            assert (lhs[0] - rhs[0], lhs[1] - rhs[1]) == rec.t
            # second renormalization level: S(U(w)) = w, so S^2 contracts twice
            assert dom.contains(rec.next)


def test_decide_known_points():
    gamma = ALL["gamma"]
    assert decide(gamma, point(0, 0)).kind == "periodic"
    assert decide(gamma, point(0, 0)).period == 1
    v = decide(gamma, point(0, "1/3"))
    assert v.kind == "aperiodic"
    assert v.cycle  # the eventual S-cycle is reported
    assert decide(ALL["sqrt2"], point(0, "1/2")).period == 4
    assert decide(ALL["inv_gamma"], point("1/2", 0)).period == 5
    assert decide(ALL["neg_sqrt2"], point(0, 0)).period == 1


def test_decide_periods_match_brute_on_grid():
    for tag in ("gamma", "neg_inv_gamma", "sqrt2", "neg_sqrt2"):
        cd = ALL[tag]
        memo = {}
        for z in sampling.grid_points(cd.case.d, 4):
            verdict = decide(cd, z, memo)
            brute = cd.case.brute_period(z, 20000)
            if verdict.kind == "periodic":
                if verdict.period is not None:
                    assert verdict.period == brute, (tag, z)
                else:
                    assert brute is not None
            else:
                assert brute is None, (tag, z)


def test_decide_memo_reuses_verdicts():
    cd = ALL["gamma"]
    memo = {}
    v1 = decide(cd, point(0, "1/3"), memo)
    v2 = decide(cd, point(0, "1/3"), memo)
    assert v1 is v2


def test_r_phase_forms():
    cd = ALL["gamma"]
    kind, *_ = r_phase(cd, point("1/2", "3/5"))
    assert kind in ("in_R", "reaches_D")
    phase = r_phase(cd, point(0, "1/3"))
    assert phase[0] == "reaches_D"
    assert cd.in_domain(phase[2]) is not None


@pytest.mark.parametrize("tag", TAGS)
def test_witnesses(tag):
    cd = ALL[tag]
    for dom in cd.domains:
        if dom.witness is not None:
            cycle = verify_witness(cd, dom)
            assert len(cycle) == len(dom.witness.cycle)


def test_kappa_digit_expansion_reconstructs():
    # kappa_digits raises if the exact reconstruction identity fails
    for tag in ("gamma", "sqrt2", "neg_sqrt2"):
        cd = ALL[tag]
        for dom in cd.domains:
            if dom.witness is None:
                continue
            phase = r_phase(cd, dom.witness.z)
            assert phase[0] == "reaches_D"
            digits = kappa_digits(cd, phase[2], 4)
            assert len(digits) == 4


@pytest.mark.parametrize("tag", TAGS)
def test_substitution_audit_small(tag):
    cd = ALL[tag]
    rng = random.Random(24)
    samples = 1 if tag == "sqrt3" else 2
    for dom in cd.domains:
        report = verify_substitution_conditions(cd, dom, samples, rng)
        assert report.ok, report.failures
