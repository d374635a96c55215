import math

import numpy as np
import pytest

from ocp_afem import bench


def boundary_points(n=1000):
    t = np.linspace(0, 1, n // 6 + 1)
    segs = [((-1, -1), (0, -1)), ((0, -1), (0, 0)), ((0, 0), (1, 0)),
            ((1, 0), (1, 1)), ((1, 1), (-1, 1)), ((-1, 1), (-1, -1))]
    return np.concatenate([np.outer(1 - t, a) + np.outer(t, b) for a, b in segs])


def interior_points(n, rng, rmin=1e-3):
    pts = rng.uniform(-1, 1, (4 * n, 2))
    keep = ~((pts[:, 0] > 0) & (pts[:, 1] < 0)) & (np.hypot(*pts.T) > rmin)
    return pts[keep][:n]


def fd_laplacian(f, x, h=1e-3):
    out = np.zeros(len(x))
    for d in range(2):
        e = np.zeros(2)
        e[d] = h
        out += (-f(x + 2 * e) + 16 * f(x + e) - 30 * f(x) + 16 * f(x - e) - f(x - 2 * e)) \
            / (12 * h * h)
    return out


def test_exact_solution_vanishes_on_boundary():
    x = boundary_points()
    assert np.abs(bench.lshape_solution(x)).max() <= 1e-12


def test_exact_control_within_bounds():
    case = bench.example1(1e-3)
    x = interior_points(10000, np.random.default_rng(0), 0.0)
    u = case.exact_u(x)
    assert u.min() >= -40 and u.max() <= -0.1
    assert u.min() == -40 and u.max() == -0.1


def test_gradient_against_finite_differences():
    rng = np.random.default_rng(1)
    x = interior_points(500, rng, 0.05)
    h = 1e-6
    g = bench.lshape_gradient(x)
    for d in range(2):
        e = np.zeros(2)
        e[d] = h
        fd = (bench.lshape_solution(x + e) - bench.lshape_solution(x - e)) / (2 * h)
        assert np.abs(fd - g[:, d]).max() <= 1e-6


def test_optimality_system_consistency():
    case = bench.example1(1e-3)
    rng = np.random.default_rng(2)
    x = interior_points(1000, rng)
    # keep the finite-difference stencil inside one smooth region
    x = x[(np.abs(x[:, 0]) > 0.01) & (np.abs(x[:, 1]) > 0.01)
          & (np.abs(np.abs(x) - 1) > 0.01).all(axis=1) & (np.hypot(*x.T) > 0.05)]
    lap = fd_laplacian(bench.lshape_solution, x)
    assert np.abs(lap - bench.lshape_laplacian(x)).max() / \
        np.abs(lap).max() <= 1e-6
    y = bench.lshape_solution(x)
    pb = case.problem
    state = -bench.lshape_laplacian(x) + np.arctan(y) - case.exact_u(x) - pb.source(x)
    adj = -bench.lshape_laplacian(x) + y / (1 + y * y) - (y - pb.y_omega(x))
    assert np.abs(state).max() <= 1e-8
    assert np.abs(adj).max() <= 1e-8


def test_example1_rejects_bad_nu():
    with pytest.raises(ValueError):
        bench.example1(0.0)


def test_example2_target_values():
    assert bench.cube_target(np.array([0.5, 0.5, 0.5])) == pytest.approx(100 / math.e)
    assert bench.cube_target(np.array([0.0, 0.0, 0.0])) == 0.0
    r = 0.5 * np.sqrt(1 - 1e-3)
    assert abs(bench.cube_target(np.array([0.5 + r, 0.5, 0.5]))) < 1e-100
    pb = bench.example2("a2")
    assert (pb.nu, pb.lower, pb.upper) == (1e-3, -80.0, 100.0)
    assert pb.source(np.zeros((4, 3))).tolist() == [10.0] * 4
    with pytest.raises(ValueError):
        bench.example2("a4")


def test_initial_mesh():
    assert bench.initial_mesh(1).dim == 2
    assert bench.initial_mesh(2).dim == 3
    with pytest.raises(ValueError):
        bench.initial_mesh(3)


def test_fit_rate_examples():
    n = np.array([10.0, 100.0, 1000.0, 1e4])
    assert bench.fit_rate(list(zip(n, 3 * n ** -0.5))) == pytest.approx(-0.5, abs=1e-12)
    assert bench.fit_rate(list(zip(n, np.full(4, 2.0)))) == pytest.approx(0.0, abs=1e-12)
    assert bench.fit_rate(list(zip(n, n ** (-1 / 3)))) == pytest.approx(-1 / 3, abs=1e-12)
    with pytest.raises(ValueError):
        bench.fit_rate([(1, 1), (2, 0.5)])
    with pytest.raises(ValueError):
        bench.fit_rate([(1, 1), (2, 0.0), (3, 1)])


def test_effectivity_examples():
    assert bench.effectivity(1.5, 1.5) == 1.0
    assert bench.effectivity(2.0, 1.0) == 2.0
    assert bench.effectivity(0.0, 0.0) == 1.0
    assert bench.effectivity(1.0, 0.0) == math.inf
    with pytest.raises(ValueError):
        bench.effectivity(-1.0, 1.0)
