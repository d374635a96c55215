import numpy as np
import pytest
import scipy.sparse as sp

from ocp_afem import fem, ocp
from ocp_afem.bench import example1
from ocp_afem.mesh import build_lshape, build_square
from ocp_afem.quadrature import rule


def smooth_target(x):
    return 3.0 * np.sin(np.pi * x[..., 0]) * np.sin(np.pi * x[..., 1])


@pytest.mark.parametrize("name", ["arctan", "a1", "a2", "a3", "zero", "linear(2)"])
def test_nonlinearity_derivatives(name):
    nl = ocp.get_nonlinearity(name)
    y = np.random.default_rng(1).uniform(-0.8, 0.8, 40)
    x = np.zeros((40, 2))
    assert np.all(nl.da_dy(x, y) >= 0)
    for f, df in ((nl.a, nl.da_dy), (nl.da_dy, nl.d2a_dy2)):
        errs = []
        for h in (1e-3, 5e-4):
            errs.append(np.abs((f(x, y + h) - f(x, y - h)) / (2 * h) - df(x, y)).max())
        scale = max(1.0, np.abs(df(x, y)).max())
        # second order: halving h quarters the error (or it is at round-off)
        assert errs[1] <= 0.3 * errs[0] + 1e-9 * scale


def test_unknown_nonlinearity():
    with pytest.raises(ValueError):
        ocp.get_nonlinearity("cosh")
    with pytest.raises(ValueError):
        ocp.linear(-1.0)


def test_problem_validation():
    with pytest.raises(ValueError):
        ocp.ControlProblem(0.0, -1, 1)
    with pytest.raises(ValueError):
        ocp.ControlProblem(1.0, 1, 1)
    with pytest.raises(ValueError):
        ocp.ControlProblem(1.0, -1, 1, theta=-2.0)


def test_project_box():
    assert ocp.project_box(5, -40, -0.1) == -0.1
    assert ocp.project_box(-50, -40, -0.1) == -40
    assert ocp.project_box(-3, -40, -0.1) == -3
    with pytest.raises(ValueError):
        ocp.project_box(0, 1, -1)


def test_cost_examples():
    m = build_square(2)
    pb = ocp.ControlProblem(0.5, -5, 5)
    y = fem.P1Function.zeros(m)
    assert ocp.cost(pb, y, fem.P0Function.zeros(m)) == 0.0
    u = fem.P0Function(m, np.full(m.num_elements, 2.0))
    assert ocp.cost(pb, y, u) == pytest.approx(0.5 * 0.5 * 4.0, rel=1e-14)


def test_cost_brute_force():
    from scipy import integrate as spi
    m = build_square(0)
    pb = ocp.ControlProblem(0.1, -5, 5, y_omega=lambda x: np.cos(x[..., 0] + x[..., 1]))
    yv = np.zeros(m.num_vertices)
    y = fem.P1Function(m, yv)
    u = fem.P0Function(m, np.array([1.0, -2.0]))
    ref, _ = spi.dblquad(lambda b, a: np.cos(a + b) ** 2, 0, 1, 0, 1,
                         epsabs=1e-13, epsrel=1e-13)
    expect = 0.5 * ref + 0.05 * (0.5 * 1 + 0.5 * 4)
    assert ocp.cost(pb, y, u) == pytest.approx(expect, rel=1e-12)


def test_residual_of_zero_fields():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1.0, -1, 1)
    z = fem.P1Function.zeros(m)
    r = ocp.kkt_residual(pb, m, (z, z, fem.P0Function.zeros(m)))
    assert r.max_norm() == 0.0


def test_residual_control_block_on_active_lower():
    m = build_lshape(1)
    pb = ocp.ControlProblem(0.3, -1, 1)
    rng = np.random.default_rng(0)
    p = fem.interpolate_p1(m, lambda x: rng.random(x.shape[:-1]))
    chi_a = np.ones(m.num_elements)
    r = ocp.kkt_residual(pb, m, (fem.P1Function.zeros(m), p,
                                 fem.P0Function(m, np.full(m.num_elements, -1.0))),
                         (chi_a, np.zeros(m.num_elements)))
    assert np.abs(r.control).max() == 0.0


def test_residual_rejects_foreign_fields():
    m, m2 = build_lshape(1), build_lshape(2)
    pb = ocp.ControlProblem(1.0, -1, 1)
    with pytest.raises(ValueError):
        ocp.kkt_residual(pb, m, (fem.P1Function.zeros(m2), fem.P1Function.zeros(m),
                                 fem.P0Function.zeros(m)))


def _linear_quadratic_oracle(pb, m):
    """Dense solve of the unconstrained linear-quadratic optimality system."""
    free = m.free_vertices
    K = fem.assemble_stiffness(m, True).toarray()
    M = fem.assemble_mass_p1(m, True).toarray()
    B = fem.p0_coupling(m)[free].toarray()
    P = fem.p0_mean(m)[:, free].toarray()
    qr = rule(2, 19)
    G = fem.assemble_data_load(m, pb.y_omega, qr)[free]
    n, ne = free.size, m.num_elements
    A = np.block([[K, np.zeros((n, n)), -B],
                  [-M, K, np.zeros((n, ne))],
                  [np.zeros((ne, n)), P / pb.nu, np.eye(ne)]])
    rhs = np.concatenate([np.zeros(n), -G, np.zeros(ne)])
    sol = np.linalg.solve(A, rhs)
    return sol[:n], sol[n:2 * n], sol[2 * n:]


def test_newton_linear_quadratic_matches_dense_oracle():
    m = build_square(3)
    pb = ocp.ControlProblem(1e-2, -1e6, 1e6, y_omega=smooth_target)
    res = ocp.newton_kkt(pb, m)
    # affine residual: the second increment only confirms convergence
    assert res.increments[1] < 1e-8 <= res.increments[0]
    y, p, u = _linear_quadratic_oracle(pb, m)
    free = m.free_vertices
    assert np.abs(res.y.values[free] - y).max() <= 1e-10
    assert np.abs(res.p.values[free] - p).max() <= 1e-10
    assert np.abs(res.u.values - u).max() <= 1e-8


def test_newton_superlinear_arctan():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1e-2, -1e3, 1e3, y_omega=lambda x: 20 + 0 * x[..., 0],
                            source=lambda x: 10 + 0 * x[..., 0],
                            nonlinearity=ocp.arctan())
    res = ocp.newton_kkt(pb, m)
    inc = [i for i in res.increments if i > 1e-14]
    assert len(inc) >= 3
    assert inc[-1] / inc[-2] < 0.1
    r = ocp.kkt_residual(pb, m, (res.y, res.p, res.u))
    assert r.max_norm() <= 1e-8


def test_newton_nonconvergence():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1e-2, -1e3, 1e3, y_omega=lambda x: 20 + 0 * x[..., 0],
                            nonlinearity=ocp.arctan())
    with pytest.raises(fem.ConvergenceError):
        ocp.newton_kkt(pb, m, max_iter=1)


def check_solution_invariants(pb, m, sol):
    u = sol.u.values
    assert u.min() >= pb.lower and u.max() <= pb.upper
    a, b = sol.active_lower.values, sol.active_upper.values
    assert np.all(a * b == 0)
    w = -sol.p.values[m.elements].mean(axis=1) / pb.nu
    inactive = (a == 0) & (b == 0)
    assert np.abs(u[inactive] - w[inactive]).max(initial=0) <= 1e-9 * max(1, np.abs(w).max())
    assert np.all(u[a == 1] == pb.lower) and np.all(u[b == 1] == pb.upper)
    assert np.abs(ocp.project_box(w, pb.lower, pb.upper) - u).max() \
        <= 1e-9 * max(1, np.abs(w).max())


def test_active_set_wide_bounds_interior():
    m = build_square(3)
    wide = ocp.ControlProblem(1e-2, -1e6, 1e6, y_omega=smooth_target,
                              nonlinearity=ocp.arctan())
    sol = ocp.active_set_solve(wide, m)
    assert sol.active_lower.values.sum() == sol.active_upper.values.sum() == 0
    check_solution_invariants(wide, m, sol)
    # tighter but still inactive bounds give the same answer
    u = sol.u.values
    tight = ocp.ControlProblem(1e-2, u.min() - 1, u.max() + 1, y_omega=smooth_target,
                               nonlinearity=ocp.arctan())
    sol2 = ocp.active_set_solve(tight, m)
    assert np.allclose(sol2.u.values, u, atol=1e-10)


def test_active_set_pinned_control():
    m = build_square(2)
    pb = ocp.ControlProblem(1e-2, 0.7 - 1e-9, 0.7, y_omega=smooth_target)
    sol = ocp.active_set_solve(pb, m)
    check_solution_invariants(pb, m, sol)


def test_active_set_example_data():
    case = example1(1e-3)
    m = build_lshape(2)
    sol = ocp.active_set_solve(case.problem, m)
    check_solution_invariants(case.problem, m, sol)
    assert sol.active_lower.values.sum() > 0
    r = ocp.kkt_residual(case.problem, m, (sol.y, sol.p, sol.u),
                         (sol.active_lower, sol.active_upper))
    assert r.max_norm() <= 1e-8


def test_symmetry_of_linear_problem():
    m = build_square(3)
    kw = dict(nonlinearity=ocp.zero())
    pos = ocp.ControlProblem(1e-2, -2, 2, y_omega=smooth_target,
                             source=lambda x: 1 + 0 * x[..., 0], **kw)
    neg = ocp.ControlProblem(1e-2, -2, 2, y_omega=lambda x: -smooth_target(x),
                             source=lambda x: -1 + 0 * x[..., 0], **kw)
    s1, s2 = ocp.active_set_solve(pos, m), ocp.active_set_solve(neg, m)
    assert np.allclose(s1.y.values, -s2.y.values, atol=1e-12)
    assert np.allclose(s1.u.values, -s2.u.values, atol=1e-10)


def test_deterministic():
    case = example1(1e-3)
    m = build_lshape(2)
    a = ocp.active_set_solve(case.problem, m)
    b = ocp.active_set_solve(case.problem, m)
    assert np.array_equal(a.y.values, b.y.values)
    assert np.array_equal(a.u.values, b.u.values)


def test_trivial_problem_zero_triple():
    m = build_lshape(2)
    pb = ocp.ControlProblem(1.0, -1, 1, nonlinearity=ocp.arctan())
    sol = ocp.active_set_solve(pb, m)
    assert sol.active_set_iters == 1
    assert not sol.y.values.any() and not sol.p.values.any() and not sol.u.values.any()


def test_newton_matrix_matches_finite_differences():
    m = build_lshape(1)
    pb = ocp.ControlProblem(0.5, -1e3, 1e3, y_omega=smooth_target,
                            nonlinearity=ocp.steep_arctan())
    system = ocp.KktSystem(pb, m)
    n = m.free_vertices.size
    rng = np.random.default_rng(2)
    y, p = 0.01 * rng.standard_normal(n), rng.standard_normal(n)
    z = np.zeros(m.num_elements)
    J = system.newton_matrix(y, p, z, z).toarray()
    h = 1e-7
    r0 = system.residual(y, p, z, z, z)
    for j in rng.choice(n, 4, replace=False):
        e = np.zeros(n)
        e[j] = h
        r1 = system.residual(y + e, p, z, z, z)
        col = np.concatenate([r1.state - r0.state, r1.adjoint - r0.adjoint]) / h
        assert np.allclose(J[:, j], col, rtol=1e-4, atol=1e-4 * np.abs(col).max())


def test_seeded_active_sets_reach_same_solution():
    case = example1(1e-3)
    m = build_lshape(2)
    cold = ocp.active_set_solve(case.problem, m)
    seeded = ocp.active_set_solve(case.problem, m,
                                  active=ocp.active_sets(case.problem, m, cold.p))
    assert seeded.active_set_iters == 1
    assert np.array_equal(seeded.active_lower.values, cold.active_lower.values)
    assert np.abs(seeded.u.values - cold.u.values).max() <= 1e-9
