import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ocp_afem.mesh import (Mesh, MeshError, build_cube, build_lshape, build_reference,
                           build_square, read_ascii, refine, uniform_refine)


def test_lshape_level0_counts():
    m = build_lshape(0)
    assert (m.num_elements, m.num_vertices) == (6, 8)
    assert m.volume == pytest.approx(3.0, rel=1e-12)
    assert m.conformity_check()


def test_lshape_level1():
    m = build_lshape(1)
    assert m.num_elements == 24
    assert m.volume == pytest.approx(3.0, rel=1e-12)


def test_lshape_face_count_handshake():
    m = build_lshape(0)
    nb = len(m.boundary_faces.elements)
    assert len(m.interior_faces.elements) == (3 * 6 - nb) // 2 == 5


def test_cube_level0():
    m = build_cube(0)
    assert m.num_elements == 6
    assert m.volume == pytest.approx(1.0, rel=1e-12)
    # every interior face joins two distinct tets
    f = m.interior_faces
    assert np.all(f.elements[:, 0] < f.elements[:, 1])
    assert m.conformity_check()


def test_cube_uniform_counts():
    m1 = uniform_refine(build_cube(0))
    assert m1.num_elements == 48
    assert m1.volume == pytest.approx(1.0, rel=1e-12)
    assert m1.conformity_check()


def test_uniform_halves_diameter():
    m = build_lshape(0)
    m1 = uniform_refine(m)
    assert m1.num_elements == 4 * m.num_elements
    assert m1.diameters.max() == pytest.approx(0.5 * m.diameters.max())


def test_square_single_interior_face():
    m = build_square(0)
    f = m.interior_faces
    assert len(f.elements) == 1
    assert np.linalg.norm(f.normals[0]) == pytest.approx(1.0, abs=1e-15)


def test_reference_bisection_splits_hypotenuse():
    m = build_reference(2)
    r = refine(m, {0})
    assert r.num_elements == 2
    assert np.allclose(r.vertices[-1], [0.5, 0.5])
    assert r.volume == pytest.approx(0.5)


def test_empty_marking_is_noop():
    m = build_lshape(1)
    r = refine(m, set())
    assert r.num_elements == m.num_elements
    assert np.array_equal(r.elements, m.elements)


def test_marked_out_of_range():
    with pytest.raises(MeshError):
        refine(build_lshape(0), {6})


def test_degenerate_element_rejected():
    with pytest.raises(MeshError):
        Mesh([[0, 0], [1, 0], [2, 0]], [[0, 1, 2]])


def test_min_angle_under_repeated_uniform_bisection():
    m = build_lshape(0)
    a0 = m.min_angle()
    for _ in range(10):
        m = refine(m, range(m.num_elements))
    assert m.min_angle() >= 0.5 * a0


def test_min_angle_stable_under_adaptive_refinement():
    rng = np.random.default_rng(3)
    m = build_lshape(0)
    angles = []
    for _ in range(15):
        marked = rng.choice(m.num_elements, size=max(1, m.num_elements // 4), replace=False)
        m = refine(m, set(marked.tolist()))
        angles.append(m.min_angle())
    assert min(angles[3:]) >= angles[2] - 1e-12


def test_refinement_keeps_old_vertices():
    m = build_cube(1)
    r = refine(m, {0, 5, 17})
    assert np.array_equal(r.vertices[:m.num_vertices], m.vertices)
    assert r.conformity_check()


def test_child_volumes_sum_to_parent():
    m = build_cube(1)
    r = refine(m, set(range(0, m.num_elements, 3)))
    sums = np.bincount(r.parent, weights=r.volumes, minlength=m.num_elements)
    assert np.allclose(sums, m.volumes, rtol=1e-12)


def test_patch_contains_neighbours():
    m = build_square(0)
    assert set(m.patch(0).tolist()) == {0, 1}


def test_ascii_roundtrip(tmp_path):
    m = build_lshape(1)
    m.write_ascii(tmp_path / "m.txt")
    r = read_ascii(tmp_path / "m.txt")
    assert np.array_equal(r.elements, m.elements)
    assert np.array_equal(r.vertices, m.vertices)


def test_vtk_written(tmp_path):
    m = build_square(1)
    m.write_vtk(tmp_path / "m.vtk", cell_data={"h": m.diameters},
                point_data={"x": m.vertices[:, 0]})
    text = (tmp_path / "m.vtk").read_text()
    assert "CELL_TYPES 8" in text and "SCALARS x double 1" in text


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), dim=st.sampled_from([2, 3]))
def test_random_refinement_stays_conforming(seed, dim):
    rng = np.random.default_rng(seed)
    m = build_lshape(0) if dim == 2 else build_cube(0)
    vol = m.volume
    for _ in range(4):
        k = rng.integers(1, m.num_elements + 1)
        marked = rng.choice(m.num_elements, size=k, replace=False)
        new = refine(m, set(marked.tolist()))
        children = np.bincount(new.parent, minlength=m.num_elements)
        assert np.all(children[marked] >= 2)
        m = new
        assert m.conformity_check()
        assert m.volume == pytest.approx(vol, rel=1e-12)
        assert np.all(m.volumes > 0)
