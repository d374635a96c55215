import numpy as np
import pytest
from scipy import integrate as spi

from ocp_afem import estimator as est
from ocp_afem import fem, ocp
from ocp_afem.mesh import build_lshape, build_reference, build_square


def const(c):
    return lambda x: np.full(np.shape(x)[:-1], float(c))


def solution(mesh, y=None, p=None, u=None):
    z1 = fem.P1Function.zeros(mesh)
    z0 = fem.P0Function.zeros(mesh)
    return ocp.KktSolution(y or z1, p or z1, u or z0, z0, z0)


def free_p1(mesh, values):
    return fem.P1Function(mesh, values, dirichlet=False)


def hat_on_square():
    m = build_square(0)
    k = int(np.flatnonzero(np.all(m.vertices == [1.0, 0.0], axis=1))[0])
    v = np.zeros(m.num_vertices)
    v[k] = 1.0
    return m, free_p1(m, v)


def test_field_validation():
    m = build_reference(2)
    with pytest.raises(ValueError):
        est.IndicatorField(m, [-1.0], "st")
    with pytest.raises(ValueError):
        est.IndicatorField(m, [1.0], "bogus")
    with pytest.raises(ValueError):
        est.IndicatorField(m, [1.0, 2.0], "st")


def test_semilinear_zero_data():
    m = build_lshape(1)
    f = est.indicator_semilinear(m, fem.P1Function.zeros(m), const(0), ocp.zero())
    assert not f.values.any()


def test_semilinear_reference_triangle():
    m = build_reference(2)
    f = est.indicator_semilinear(m, fem.P1Function.zeros(m), const(1), ocp.zero())
    assert f.values[0] == pytest.approx(1.0, rel=1e-14)


def test_semilinear_linear_state():
    m = build_lshape(2)
    y = free_p1(m, 1 + m.vertices[:, 0] - 2 * m.vertices[:, 1])
    nl = ocp.arctan()
    f = lambda x: np.arctan(1 + x[..., 0] - 2 * x[..., 1])
    assert est.indicator_semilinear(m, y, f, nl).total() <= 1e-13


def test_state_equals_semilinear_with_shifted_rhs():
    m = build_lshape(2)
    rng = np.random.default_rng(3)
    y = fem.interpolate_p1(m, lambda x: rng.random(x.shape[:-1]))
    u = fem.P0Function(m, rng.random(m.num_elements))
    pb = ocp.ControlProblem(1.0, -5, 5, source=lambda x: x[..., 0] ** 2,
                            nonlinearity=ocp.arctan())
    st = est.indicator_state(m, solution(m, y=y, u=u), pb)
    semi = est.indicator_semilinear(m, y, lambda x: x[..., 0] ** 2 + u(x), pb.nonlinearity)
    # u evaluated by point location agrees with the elementwise value at interior nodes
    assert np.allclose(st.values, semi.values, rtol=1e-12, atol=1e-15)


def test_state_zero_at_trivial_solution():
    m = build_lshape(2)
    pb = ocp.ControlProblem(1.0, -1, 1, nonlinearity=ocp.arctan())
    sol = ocp.active_set_solve(pb, m)
    assert est.indicator_state(m, sol, pb).total() == 0.0
    assert est.estimate(m, sol, pb)["total"].total() <= 1e-12


def test_adjoint_examples():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1.0, -1, 1, nonlinearity=ocp.cubic())
    assert not est.indicator_adjoint(m, solution(m), pb).values.any()
    ref = build_reference(2)
    pb1 = ocp.ControlProblem(1.0, -1, 1, y_omega=const(1))
    val = est.indicator_adjoint(ref, solution(ref), pb1).values[0]
    assert val == pytest.approx(2 * 0.5, rel=1e-14)


def test_adjoint_jump_matches_hat_jump():
    m, hat = hat_on_square()
    pb = ocp.ControlProblem(1.0, -1, 1)
    p = hat
    sol = ocp.KktSolution(fem.P1Function.zeros(m), p, fem.P0Function.zeros(m),
                          fem.P0Function.zeros(m), fem.P0Function.zeros(m))
    ad = est.indicator_adjoint(m, sol, pb)
    # a = 0 removes the element residual; jump sqrt(2) on the diagonal of length sqrt(2)
    jump = abs(fem.gradient_jump(m, hat, 0))
    assert jump == pytest.approx(np.sqrt(2))
    assert np.allclose(ad.values, m.diameters * jump ** 2 * np.sqrt(2), rtol=1e-12)


def test_control_tilde_examples():
    m = build_lshape(1)
    nu = 1e-3
    pb = ocp.ControlProblem(nu, -40, -0.1)
    x = np.array([[-0.5, 0.5], [0.3, 0.8]])
    assert np.allclose(est.control_tilde(m, fem.P1Function.zeros(m), pb)(x), -0.1)
    p = free_p1(m, np.full(m.num_vertices, 3 * nu))
    assert np.allclose(est.control_tilde(m, p, pb)(x), -3.0)
    vals = np.linspace(-0.1, 0.1, 50)
    fn = est.control_tilde(m, p, pb).fn
    assert np.all(np.diff(fn(vals)) <= 0)


def test_control_indicator_examples():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1e-3, -40, -0.1)
    u = fem.P0Function(m, np.full(m.num_elements, -0.1))
    assert not est.indicator_control(m, solution(m, u=u), pb).values.any()
    p = free_p1(m, np.full(m.num_vertices, 0.005))
    ut = est.control_tilde(m, p, pb)
    u = fem.project_p0(m, ut)
    sol = solution(m, u=u)
    sol.p = p
    assert est.indicator_control(m, sol, pb).total() <= 1e-13
    ref = build_reference(2)
    pb2 = ocp.ControlProblem(1.0, 1, 2)
    assert est.indicator_control(ref, solution(ref), pb2).values[0] == pytest.approx(0.5)


def test_competitor_control_examples():
    m = build_lshape(1)
    assert not est.indicator_competitor_control(m, solution(m)).values.any()
    ref = build_reference(2)
    v = np.zeros(3)
    v[0] = 1.0
    sol = solution(ref)
    sol.p = free_p1(ref, v)
    assert est.indicator_competitor_control(ref, sol).values[0] == pytest.approx(2.0)


def test_total_examples():
    m = build_reference(2)
    st, ad, ct = (est.IndicatorField(m, [v], k) for v, k in ((9, "st"), (16, "ad"), (0, "ct")))
    assert est.indicator_total(st, ad, ct).total() == 5.0
    assert est.indicator_total(ct, st, ad).total() == 5.0
    z = est.IndicatorField(m, [0.0], "st")
    assert est.indicator_total(z, z, z).total() == 0.0
    other = est.IndicatorField(build_reference(2), [1.0], "ct")
    with pytest.raises(ValueError):
        est.indicator_total(st, ad, other)


def test_competitor_total_shares_state_and_adjoint():
    m = build_lshape(2)
    from ocp_afem.bench import example1
    case = example1(1e-3)
    sol = ocp.active_set_solve(case.problem, m)
    ours = est.estimate(m, sol, case.problem)
    comp = est.estimate(m, sol, case.problem, "competitor")
    assert np.array_equal(ours["st"].values, comp["st"].values)
    assert np.array_equal(ours["ad"].values, comp["ad"].values)
    assert np.allclose(comp["total"].values,
                       comp["st"].values + comp["ad"].values + comp["ct"].values)
    with pytest.raises(ValueError):
        est.estimate(m, sol, case.problem, "bogus")


def test_oscillation_constant_and_linear():
    m = build_lshape(2)
    assert est.oscillation(m, const(2)).total() <= 1e-14
    assert est.oscillation(m, lambda x: 1 + 3 * x[..., 0] - x[..., 1]).total() <= 1e-13


def test_oscillation_square_oracle():
    m = build_square(0)
    osc = est.oscillation(m, lambda x: x[..., 0] ** 2).values
    for e, tri in enumerate(m.vertices[m.elements]):
        # local L2 projection onto linears, solved densely
        def on_tri(fn):
            a, b, c = tri

            def g(s, t):
                x = a + s * (b - a) + t * (c - a)
                return fn(x)
            jac = abs(np.linalg.det(np.stack([b - a, c - a])))
            val, _ = spi.dblquad(lambda t, s: g(s, t), 0, 1, 0, lambda s: 1 - s,
                                 epsabs=1e-13, epsrel=1e-13)
            return jac * val
        basis = [lambda x: 1.0, lambda x: x[0], lambda x: x[1]]
        G = np.array([[on_tri(lambda x, i=i, j=j: basis[i](x) * basis[j](x))
                       for j in range(3)] for i in range(3)])
        r = np.array([on_tri(lambda x, i=i: x[0] ** 2 * basis[i](x)) for i in range(3)])
        c = np.linalg.solve(G, r)
        err = on_tri(lambda x: (x[0] ** 2 - c[0] - c[1] * x[0] - c[2] * x[1]) ** 2)
        h = max(np.linalg.norm(tri[i] - tri[j]) for i in range(3) for j in range(i))
        assert osc[e] == pytest.approx(h ** 2 * err, rel=1e-10, abs=1e-14)


def test_sparse_auxiliary_examples():
    m = build_lshape(1)
    theta = 0.5
    pb = ocp.ControlProblem(1e-2, -3, 4, theta=theta)
    x = np.array([[-0.5, 0.5], [0.3, 0.8]])
    lam, u = est.sparse_auxiliary(m, free_p1(m, np.full(m.num_vertices, 2 * theta)), pb)
    assert np.all(lam(x) == -1.0)
    lam, u = est.sparse_auxiliary(m, fem.P1Function.zeros(m), pb)
    assert np.all(lam(x) == 0.0) and np.all(u(x) == 0.0)
    tiny = ocp.ControlProblem(1e-2, -3, 4, theta=1e-12)
    lam, _ = est.sparse_auxiliary(m, free_p1(m, np.full(m.num_vertices, -0.3)), tiny)
    assert np.all(lam(x) == 1.0)
    with pytest.raises(ValueError):
        est.sparse_auxiliary(m, fem.P1Function.zeros(m), ocp.ControlProblem(1, -1, 1))


def test_subgradient_and_sparse_control_indicators():
    m = build_lshape(1)
    pb = ocp.ControlProblem(1e-2, -3, 4, theta=0.5)
    p = free_p1(m, np.full(m.num_vertices, 0.2))
    lam_t, u_t = est.sparse_auxiliary(m, p, pb)
    assert est.indicator_subgradient(m, fem.project_p0(m, lam_t), p, pb).total() <= 1e-13
    assert est.indicator_control_sparse(m, fem.project_p0(m, u_t), p, pb).total() <= 1e-13
    z = fem.P0Function.zeros(m)
    assert est.indicator_subgradient(m, z, fem.P1Function.zeros(m), pb).total() == 0.0
    lam = fem.project_p0(m, lam_t)
    lam.values[3] += 0.25
    sg = est.indicator_subgradient(m, lam, p, pb).values
    assert sg[3] == pytest.approx(0.0625 * m.volumes[3], rel=1e-12)
    assert np.delete(sg, 3).max() <= 1e-26
