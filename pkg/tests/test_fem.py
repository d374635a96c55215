import numpy as np
import pytest
import scipy.sparse as sp

from ocp_afem import fem
from ocp_afem.mesh import MeshError, build_lshape, build_reference, build_square, refine
from ocp_afem.ocp import arctan, linear, zero
from ocp_afem.quadrature import rule


def one(x):
    return np.ones(x.shape[:-1])


def test_reference_stiffness_hand_values():
    K = fem.assemble_stiffness(build_reference(2)).toarray()
    assert K[0, 0] == 1.0
    assert K[0, 1] == K[0, 2] == -0.5
    assert np.abs(K - K.T).max() == 0.0


def test_reference_mass_block():
    M = fem.assemble_mass_p1(build_reference(2)).toarray()
    assert np.abs(M - np.array([[2, 1, 1], [1, 2, 1], [1, 1, 2]]) / 24).max() <= 1e-15


def test_mass_total_is_volume():
    m = build_lshape(2)
    M = fem.assemble_mass_p1(m)
    assert M.sum() == pytest.approx(3.0, rel=1e-13)
    row = np.asarray(M.sum(axis=1)).ravel()
    lumped = np.bincount(m.elements.ravel(), np.repeat(m.volumes / 3, 3))
    assert np.allclose(row, lumped)


def test_solve_sparse_small_cases():
    assert np.allclose(fem.solve_sparse(sp.eye(4), np.arange(4.0)), np.arange(4.0))
    assert fem.solve_sparse(sp.csr_matrix([[2.0]]), np.array([4.0]))[0] == 2.0


def test_solve_sparse_dense_oracle():
    m = build_square(4)
    A = fem.assemble_stiffness(m, dirichlet=True)
    b = (fem.assemble_mass_p1(m, dirichlet=True) @ np.ones(A.shape[0]))
    assert A.shape[0] <= 500
    x = fem.solve_sparse(A, b)
    ref = np.linalg.solve(A.toarray(), b)
    assert np.abs(x - ref).max() <= 1e-10 * np.abs(ref).max()


def test_solve_sparse_singular():
    with pytest.raises(fem.SolverError):
        fem.solve_sparse(sp.csr_matrix(np.ones((3, 3))), np.ones(3))


def test_semilinear_zero_matches_linear_solve():
    m = build_lshape(2)
    y = fem.semilinear_solve(m, zero(), one)
    qr = rule(2, 19)
    A = fem.assemble_stiffness(m, dirichlet=True)
    b = fem.assemble_data_load(m, one, qr)[m.free_vertices]
    ref = fem.solve_sparse(A, b)
    assert np.abs(y.values[m.free_vertices] - ref).max() <= 1e-10


def test_semilinear_affine_one_newton_step():
    m = build_lshape(1)
    y = fem.semilinear_solve(m, linear(3.0), one, max_iter=1)
    assert np.all(np.isfinite(y.values))


def test_semilinear_arctan_zero_rhs():
    m = build_lshape(1)
    y = fem.semilinear_solve(m, arctan(), lambda x: np.zeros(x.shape[:-1]))
    assert np.all(y.values == 0.0)


def test_semilinear_galerkin_orthogonality_and_max_principle():
    m = build_lshape(2)
    y = fem.semilinear_solve(m, zero(), one)
    K = fem.assemble_stiffness(m, dirichlet=True)
    b = fem.assemble_data_load(m, one, rule(2, 19))[m.free_vertices]
    assert np.abs(K @ y.values[m.free_vertices] - b).max() <= 1e-10
    assert y.values.min() >= -1e-12


def test_semilinear_nonconvergence_carries_history():
    m = build_lshape(1)
    with pytest.raises(fem.ConvergenceError) as info:
        fem.semilinear_solve(m, arctan(), lambda x: 50.0 * np.ones(x.shape[:-1]),
                             max_iter=1)
    assert len(info.value.history) == 2


def test_project_p0_examples():
    m = build_reference(2)
    assert fem.project_p0(m, lambda x: x[..., 0]).values[0] == pytest.approx(1 / 3)
    assert fem.project_p0(m, lambda x: x[..., 0] ** 2).values[0] == pytest.approx(1 / 6)
    m2 = build_lshape(1)
    assert np.allclose(fem.project_p0(m2, lambda x: 2.5 + 0 * x[..., 0]).values, 2.5)


def test_project_p1_elementwise():
    m = build_square(1)
    lin = lambda x: 1 + 2 * x[..., 0] - x[..., 1]
    coef = fem.project_p1_elementwise(m, lin)
    assert np.allclose(coef, lin(m.vertices[m.elements]), atol=1e-13)
    ref = build_reference(2)
    f = lambda x: x[..., 0] ** 2
    c = fem.project_p1_elementwise(ref, f)[0]
    qr = rule(2, 19)
    x = qr.points[:, 1:]
    res = f(x) - qr.points @ c
    for test in (np.ones(len(x)), x[:, 0], x[:, 1]):
        assert abs(qr.weights @ (res * test)) <= 1e-12


def test_gradient_jump_hat_on_split_square():
    m = build_square(0)
    # vertex at (1, 0)
    k = int(np.flatnonzero(np.all(m.vertices == [1.0, 0.0], axis=1))[0])
    v = np.zeros(m.num_vertices)
    v[k] = 1.0
    hat = fem.P1Function(m, v, dirichlet=False)
    assert abs(fem.gradient_jump(m, hat, 0)) == pytest.approx(np.sqrt(2), rel=1e-14)
    assert abs(fem.gradient_jump(m, hat, tuple(m.interior_faces.vertices[0][::-1]))) \
        == pytest.approx(np.sqrt(2))


def test_gradient_jump_linear_vanishes():
    m = refine(build_lshape(1), {0, 3, 7})
    v = fem.P1Function(m, 2 * m.vertices[:, 0] - m.vertices[:, 1], dirichlet=False)
    assert np.abs(fem.gradient_jumps(m, v.values)).max() <= 1e-13


def test_gradient_jump_boundary_face_rejected():
    m = build_square(0)
    v = fem.P1Function(m, np.zeros(m.num_vertices))
    with pytest.raises(MeshError):
        fem.gradient_jump(m, v, tuple(m.boundary_faces.vertices[0]))


def test_norms_of_hat_against_hand_values():
    m = build_square(0)
    k = int(np.flatnonzero(np.all(m.vertices == [1.0, 0.0], axis=1))[0])
    v = np.zeros(m.num_vertices)
    v[k] = 1.0
    hat = fem.P1Function(m, v, dirichlet=False)
    n = fem.norms(m, hat)
    # hat x - y on one triangle of area 1/2: int phi^2 = |T|/6, |grad|^2 = 2
    assert n.l2 == pytest.approx(np.sqrt(1 / 12), rel=1e-13)
    assert n.h1 == pytest.approx(1.0, rel=1e-13)
    assert n.linf == 1.0
    assert fem.norms(m, hat, hat) == (0.0, 0.0, 0.0)


def test_norms_symmetric():
    m = build_lshape(1)
    rng = np.random.default_rng(0)
    a = fem.P1Function(m, rng.random(m.num_vertices), dirichlet=False)
    b = fem.P1Function(m, rng.random(m.num_vertices), dirichlet=False)
    assert np.allclose(fem.norms(m, a, b), fem.norms(m, b, a), rtol=1e-14)


def test_h1_rate_smooth_poisson():
    sol = lambda x: np.sin(np.pi * x[..., 0]) * np.sin(np.pi * x[..., 1])
    grad = lambda x: np.pi * np.stack(
        [np.cos(np.pi * x[..., 0]) * np.sin(np.pi * x[..., 1]),
         np.sin(np.pi * x[..., 0]) * np.cos(np.pi * x[..., 1])], axis=-1)
    rhs = lambda x: 2 * np.pi ** 2 * sol(x)
    pts = []
    for lev in (3, 4, 5, 6):
        m = build_square(lev)
        y = fem.semilinear_solve(m, zero(), rhs)
        pts.append((m.free_vertices.size, fem.norms(m, y, sol, grad).h1))
    ndof, err = np.array(pts).T
    slope = np.polyfit(np.log(ndof), np.log(err), 1)[0]
    assert abs(slope + 0.5) <= 0.05


def test_prolongation_is_exact():
    m = build_lshape(1)
    v = fem.interpolate_p1(m, lambda x: np.sin(x[..., 0]) * np.cos(x[..., 1]))
    fine = refine(refine(m, {0, 4, 9}), {1, 2})
    # compose: prolong over two steps
    mid = refine(m, {0, 4, 9})
    fine = refine(mid, {1, 2})
    pv = fem.prolong_p1(fem.prolong_p1(v, mid), fine)
    pts = fine.vertices
    assert np.allclose(pv.values, v(pts), atol=1e-13)
    u = fem.P0Function(m, np.arange(m.num_elements, dtype=float))
    pu = fem.prolong_p0(u, mid)
    assert np.array_equal(pu.values, u.values[mid.parent])


def test_dirichlet_flag_enforced():
    m = build_square(1)
    with pytest.raises(ValueError):
        fem.P1Function(m, np.ones(m.num_vertices))


def test_point_evaluation():
    m = build_lshape(2)
    f = fem.interpolate_p1(m, lambda x: x[..., 0] + 2 * x[..., 1], dirichlet=False)
    pts = np.array([[-0.33, 0.71], [0.2, 0.9], [-0.9, -0.1]])
    assert np.allclose(f(pts), pts[:, 0] + 2 * pts[:, 1])
