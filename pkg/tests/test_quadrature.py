from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np
import pytest
from scipy import integrate as spi

from ocp_afem.mesh import Mesh, build_reference
from ocp_afem.quadrature import (MAX_DEGREE, QuadratureError, element_integrals,
                                 integrate, rule)


def exact_monomial(alpha):
    # x^a y^b (z^c) over the unit right simplex, as a rational
    return Fraction(np.prod([factorial(a) for a in alpha]),
                    factorial(sum(alpha) + len(alpha)))


@pytest.mark.parametrize("dim", [2, 3])
def test_weights_sum_to_reference_volume(dim):
    for deg in range(1, MAX_DEGREE[dim] + 1):
        qr = rule(dim, deg)
        assert qr.weights.sum() == pytest.approx(1 / factorial(dim), abs=1e-14)
        assert np.all(qr.weights > 0)
        assert np.allclose(qr.points.sum(axis=1), 1.0)


@pytest.mark.parametrize("dim", [2, 3])
def test_monomial_exactness(dim):
    for deg in range(1, MAX_DEGREE[dim] + 1):
        qr = rule(dim, deg)
        x = qr.points[:, 1:]
        for alpha in product(range(deg + 1), repeat=dim):
            if sum(alpha) > deg:
                continue
            approx = qr.weights @ np.prod(x ** np.array(alpha), axis=1)
            exact = float(exact_monomial(alpha))
            assert abs(approx - exact) <= 1e-12 * exact


def test_constant_and_quadratic():
    assert rule(2, 1).weights.sum() == pytest.approx(0.5)
    qr = rule(2, 2)
    assert qr.weights @ qr.points[:, 1] ** 2 == pytest.approx(1 / 12, abs=1e-15)


def test_high_monomial_against_rational():
    qr = rule(2, 19)
    val = qr.weights @ (qr.points[:, 1] ** 10 * qr.points[:, 2] ** 9)
    exact = Fraction(factorial(10) * factorial(9), factorial(21))
    assert val == pytest.approx(float(exact), rel=1e-12)


def test_unsupported_degree():
    with pytest.raises(QuadratureError):
        rule(2, 20)
    with pytest.raises(QuadratureError):
        rule(3, 15)
    with pytest.raises(QuadratureError):
        rule(4, 1)


def test_integrate_constant_and_linear():
    m = Mesh([[0.3, 0.1], [1.4, 0.2], [0.5, 1.1]], [[0, 1, 2]])
    area = m.volumes[0]
    assert integrate(m, 0, lambda x: np.full(len(x), 3.0), 1) == pytest.approx(3 * area)
    # barycentric coordinate of the third vertex
    v = m.vertices
    A = np.column_stack([v[1] - v[0], v[2] - v[0]])

    def lam2(x):
        return np.linalg.solve(A, (x - v[0]).T)[1]

    assert integrate(m, 0, lam2, 2) == pytest.approx(area / 3, rel=1e-13)


def test_exp_against_nested_reference_integration():
    m = build_reference(2)
    val = integrate(m, 0, lambda x: np.exp(x[:, 0]), 19)
    ref, _ = spi.dblquad(lambda y, x: np.exp(x), 0, 1, 0, lambda x: 1 - x,
                         epsabs=1e-13, epsrel=1e-13)
    assert val == pytest.approx(ref, abs=1e-10)


def test_nan_integrand_raises():
    m = build_reference(2)
    with pytest.raises(QuadratureError):
        integrate(m, 0, lambda x: np.full(len(x), np.nan), 2)
    with pytest.raises(QuadratureError):
        element_integrals(m, lambda x: np.full(x.shape[:-1], np.nan), 2)
