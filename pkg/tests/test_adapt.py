import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ocp_afem import adapt, ocp
from ocp_afem.bench import example1, initial_mesh
from ocp_afem.estimator import IndicatorField
from ocp_afem.mesh import build_lshape, build_reference


def test_mark_max_examples():
    assert adapt.mark_max([4.0, 1.0, 3.0]) == {0, 2}
    assert adapt.mark_max([2.0, 2.0, 2.0]) == {0, 1, 2}
    assert adapt.mark_max([5.0]) == {0}
    assert adapt.mark_max([0.0, 0.0]) == set()
    assert adapt.mark_max(IndicatorField(build_reference(2), [1.0], "ocp")) == {0}
    with pytest.raises(ValueError):
        adapt.mark_max([])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(0, 1e6), min_size=1, max_size=40),
       st.floats(1e-6, 1e6))
def test_mark_max_scale_invariant(values, scale):
    v = np.array(values)
    marked = adapt.mark_max(v)
    if v.max() > 0:
        assert int(np.argmax(v)) in marked
    # exact rescaling by a power of two keeps every comparison identical
    s = 2.0 ** round(math.log2(scale))
    assert adapt.mark_max(v * s) == marked


def test_count_dofs():
    m = build_lshape(1)
    assert adapt.count_dofs(m) == 2 * m.free_vertices.size + m.num_elements


def test_trivial_problem_stops_at_first_iteration():
    pb = ocp.ControlProblem(1.0, -1, 1, nonlinearity=ocp.arctan())
    recs, sol = adapt.adaptive_loop(pb, build_lshape(1), adapt.AdaptConfig(max_iters=5))
    assert len(recs) == 1 and recs[0].est_total == 0.0


def test_config_validation():
    pb = ocp.ControlProblem(1.0, -1, 1)
    for cfg in (adapt.AdaptConfig(max_iters=0), adapt.AdaptConfig(estimator="x"),
                adapt.AdaptConfig(refinement="x")):
        with pytest.raises(ValueError):
            adapt.adaptive_loop(pb, build_lshape(1), cfg)


@pytest.fixture(scope="module")
def short_run():
    case = example1(1e-3)
    seen = []

    def cb(rec, mesh, sol, est):
        if rec.marked:
            c = mesh.centroids
            marked = est["total"].values > 0.5 * est["total"].values.max()
            seen.append((c, mesh.volumes, marked))

    recs, sol = adapt.adaptive_loop(case.problem, initial_mesh(1),
                                    adapt.AdaptConfig(max_iters=8, exact=case),
                                    callback=cb)
    return recs, sol, seen


def test_ndof_increases(short_run):
    recs, _, _ = short_run
    nd = [r.ndof for r in recs]
    assert len(nd) == 8 and all(b > a for a, b in zip(nd, nd[1:]))
    assert all(math.isfinite(r.effectivity) for r in recs)


def test_refinement_concentrates_near_corner(short_run):
    _, _, seen = short_run
    frac_marked, frac_area = [], []
    for c, vol, marked in seen:
        near = np.hypot(c[:, 0], c[:, 1]) < 0.2
        frac_marked.append(near[marked].mean())
        frac_area.append(vol[near].sum() / vol.sum())
    assert np.mean(frac_marked) > np.mean(frac_area)


def test_marked_elements_are_bisected():
    case = example1(1e-3)
    m = initial_mesh(1)
    sol = ocp.active_set_solve(case.problem, m)
    from ocp_afem.estimator import estimate
    from ocp_afem.mesh import refine
    marked = adapt.mark_max(estimate(m, sol, case.problem)["total"])
    fine = refine(m, marked)
    children = np.bincount(fine.parent, minlength=m.num_elements)
    assert np.all(children[list(marked)] >= 2)


def test_csv_roundtrip(short_run, tmp_path):
    recs, _, _ = short_run
    path = tmp_path / "r.csv"
    adapt.write_csv(recs, path)
    back = adapt.read_csv(path)
    for a, b in zip(recs, back):
        assert a.as_row() == b.as_row()
    assert path.read_text().splitlines()[0] == ",".join(adapt.CSV_COLUMNS)


def test_csv_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n")
    with pytest.raises(ValueError):
        adapt.read_csv(path)


def test_deterministic_apart_from_timing():
    case = example1(1e-3)
    cfg = adapt.AdaptConfig(max_iters=4, exact=case)
    a, _ = adapt.adaptive_loop(case.problem, initial_mesh(1), cfg)
    b, _ = adapt.adaptive_loop(case.problem, initial_mesh(1), cfg)
    assert [r.as_row()[:-1] for r in a] == [r.as_row()[:-1] for r in b]


def test_competitor_plumbing():
    case = example1(1e-3)
    recs, _ = adapt.adaptive_loop(case.problem, initial_mesh(1),
                                  adapt.AdaptConfig(max_iters=2, estimator="competitor"))
    assert all(r.estimator == "competitor" for r in recs)
    assert all(math.isnan(r.err_total) for r in recs)
    assert recs[0].est_total == pytest.approx(
        math.sqrt(recs[0].est_st ** 2 + recs[0].est_ad ** 2 + recs[0].est_ct ** 2))


def test_uniform_refinement_quadruples():
    case = example1(1e-3)
    recs, sol = adapt.adaptive_loop(case.problem, build_lshape(1),
                                    adapt.AdaptConfig(max_iters=2, refinement="uniform"))
    assert sol.mesh.num_elements == 4 * build_lshape(1).num_elements
