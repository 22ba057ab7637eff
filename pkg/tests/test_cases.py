"""Structural checks on the per-parameter data tables."""

import random

import pytest

from quadtorus import sampling
from quadtorus.cases import all_tags, load_case
from quadtorus.dynamics import get_case

TAGS = all_tags()


def test_all_tags():
    assert set(TAGS) == {
        "gamma",
        "inv_gamma",
        "neg_gamma",
        "neg_inv_gamma",
        "sqrt2",
        "neg_sqrt2",
        "sqrt3",
        "neg_sqrt3",
    }


@pytest.mark.parametrize("tag", TAGS)
def test_load_case_consistent(tag):
    cd = load_case(tag)
    assert cd.case is get_case(tag)
    assert load_case(tag.replace("_", "-")).case is cd.case
    assert cd.domains
    ids = [dom.id for dom in cd.domains]
    assert len(set(ids)) == len(ids)


@pytest.mark.parametrize("tag", TAGS)
def test_scaling_units(tag):
    cd = load_case(tag)
    for dom in cd.domains:
        kappa = dom.scaling.kappa
        assert abs(kappa.norm()) == 1
        assert dom.epsilon in (-1, 1)
        # the orientation sign is the sign of the norm of kappa
        assert (1 if kappa.norm() > 0 else -1) == dom.epsilon
        # V and U are mutually inverse affine maps
        z = (cd.case.lam.frac() / 3, cd.case.lam.frac() / 7)
        assert dom.scaling.V_inv(dom.scaling.V(z)) == z
        assert dom.scaling.U_inv(dom.scaling.U(z)) == z
        assert 0 < dom.delta.sign()


@pytest.mark.parametrize("tag", TAGS)
def test_cells_disjoint_and_inside_domain(tag):
    cd = load_case(tag)
    rng = random.Random(11)
    for dom in cd.domains:
        for cell in dom.cells:
            if cell.sampler is None:
                continue
            for z in sampling.sample_cell(cd, dom, cell, 5, rng):
                assert dom.contains(z)
                w = dom.cell_frame(z)
                # lower-dimensional cells (segments, isolated points) may sit
                # inside a box cell's closed region; they are listed before it,
                # so cell_of resolves membership by priority.  Box cells must
                # be mutually disjoint.
                box_owners = [
                    c.label
                    for c in dom.cells
                    if c.sampler and c.sampler[0] == "box" and c.contains(w)
                ]
                assert dom.cell_of(z) is cell
                if cell.sampler[0] == "box":
                    assert box_owners == [cell.label]
                else:
                    assert len(box_owners) <= 1


@pytest.mark.parametrize("tag", TAGS)
def test_scaled_copy_lies_inside_domain(tag):
    cd = load_case(tag)
    rng = random.Random(12)
    for dom in cd.domains:
        for cell in dom.cells:
            if cell.sampler is None:
                continue
            for z in sampling.sample_cell(cd, dom, cell, 3, rng):
                assert dom.contains(dom.scaling.U(z))


@pytest.mark.parametrize("tag", TAGS)
def test_substitution_tables_cover_cells(tag):
    cd = load_case(tag)
    for dom in cd.domains:
        labels = {cell.label for cell in dom.cells}
        assert set(dom.subst.images) <= labels | set(dom.subst.alphabet)
        for (label, _k) in dom.shat:
            assert label in labels
        for (label, _k) in dom.t_table:
            assert label in labels
        # shat defaults: 0 at k=0, -epsilon*k otherwise unless tabulated
        sample = next(iter(labels))
        assert dom.shat_for(sample, 0) == 0


@pytest.mark.parametrize("tag", TAGS)
def test_tau_values_positive(tag):
    cd = load_case(tag)
    for dom in cd.domains:
        for cell in dom.cells:
            if cell.tau is not None:
                assert cell.tau
                assert all(t >= 1 for t in cell.tau)


@pytest.mark.parametrize("tag", TAGS)
def test_witness_inside_domain(tag):
    cd = load_case(tag)
    for dom in cd.domains:
        if dom.witness is None:
            continue
        assert cd.in_domain(dom.witness.z) is not None
        assert dom.witness.coords in ("direct", "V")
        assert dom.witness.cycle


@pytest.mark.parametrize("tag", TAGS)
def test_compiled_membership_matches_exact(tag):
    cd = load_case(tag)
    rng = random.Random(13)
    # compare on a small rational grid plus cell samples
    pts = list(sampling.grid_points(cd.case.d, 5))
    for dom in cd.domains:
        for cell in dom.cells:
            if cell.sampler is not None:
                pts.extend(sampling.sample_cell(cd, dom, cell, 2, rng))
    for z in pts:
        orbit = cd.case.fast(z)
        which = cd.compile_membership(orbit)
        got = which()
        expected = cd.in_domain(z)
        assert (got.id if got else None) == (expected.id if expected else None)


@pytest.mark.parametrize("tag", TAGS)
def test_period_rows_well_formed(tag):
    cd = load_case(tag)
    for row in cd.period_rows:
        leveled = row.formula is not None
        assert leveled == (row.base is not None)
        assert leveled != (row.period is not None)
        if leveled:
            assert row.formula(1) > row.formula(0) > 0
        else:
            assert row.period >= 1 and row.points
