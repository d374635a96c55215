"""Benchmark problems, exact-error evaluation and rate fitting."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ocp_afem import mesh as meshmod
from ocp_afem.fem import norms
from ocp_afem.ocp import ControlProblem, arctan, get_nonlinearity, project_box

HALF_PI = 0.5 * np.pi


@dataclass(frozen=True)
class ManufacturedCase:
    """Optimal control problem with known optimal state, adjoint and control."""

    exact_y: Callable
    grad_y: Callable
    exact_p: Callable
    grad_p: Callable
    exact_u: Callable
    problem: ControlProblem
    laplace_y: Callable = None
    laplace_p: Callable = None


# -- Example 1: L-shaped domain, singular corner solution --------------------

def _polar(x):
    r = np.hypot(x[..., 0], x[..., 1])
    theta = np.mod(np.arctan2(x[..., 1], x[..., 0]), 2.0 * np.pi)
    return r, theta


def _smooth(x):
    sx, sy = np.sin(HALF_PI * (x[..., 0] + 1)), np.sin(HALF_PI * (x[..., 1] + 1))
    cx, cy = np.cos(HALF_PI * (x[..., 0] + 1)), np.cos(HALF_PI * (x[..., 1] + 1))
    s = sx * sy
    grad = HALF_PI * np.stack([cx * sy, sx * cy], axis=-1)
    return s, grad, -2.0 * HALF_PI ** 2 * s


def _corner(x):
    r, theta = _polar(x)
    phi = r ** (2.0 / 3.0) * np.sin(2.0 * theta / 3.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.where(r > 0, (2.0 / 3.0) * r ** (-1.0 / 3.0), 0.0)
    grad = c[..., None] * np.stack([-np.sin(theta / 3.0), np.cos(theta / 3.0)], axis=-1)
    return phi, grad


def lshape_solution(x):
    """Singular solution S(x) r^{2/3} sin(2 theta/3) vanishing on the boundary."""
    s, _, _ = _smooth(x)
    phi, _ = _corner(x)
    return s * phi


def lshape_gradient(x):
    s, gs, _ = _smooth(x)
    phi, gphi = _corner(x)
    return phi[..., None] * gs + s[..., None] * gphi


def lshape_laplacian(x):
    # the corner factor is harmonic
    _, gs, ls = _smooth(x)
    phi, gphi = _corner(x)
    return phi * ls + 2.0 * (gs * gphi).sum(axis=-1)


def example1(nu, lower=-40.0, upper=-0.1):
    """L-shape problem with arctan nonlinearity and exact solution y = p."""
    if not nu > 0:
        raise ValueError("nu must be positive")
    nl = arctan()

    def exact_u(x):
        return project_box(-lshape_solution(x) / nu, lower, upper)

    def source(x):
        y = lshape_solution(x)
        return -lshape_laplacian(x) + np.arctan(y) - exact_u(x)

    def y_omega(x):
        y = lshape_solution(x)
        return y + lshape_laplacian(x) - y / (1.0 + y * y)

    problem = ControlProblem(nu, lower, upper, y_omega=y_omega, source=source,
                             nonlinearity=nl)
    return ManufacturedCase(lshape_solution, lshape_gradient, lshape_solution,
                            lshape_gradient, exact_u, problem,
                            lshape_laplacian, lshape_laplacian)


# -- Example 2: unit cube, no exact solution ----------------------------------

def cube_target(x):
    """100 exp(1/xi) cos(4 pi xi) inside the ball xi < 0, zero outside."""
    xi = 4.0 * ((np.asarray(x) - 0.5) ** 2).sum(axis=-1) - 1.0
    inside = xi < 0
    safe = np.where(inside, xi, -1.0)
    return np.where(inside, 100.0 * np.exp(1.0 / safe) * np.cos(4.0 * np.pi * safe), 0.0)


def example2(tag, nu=1e-3):
    if tag not in ("a1", "a2", "a3"):
        raise ValueError(f"unknown nonlinearity tag {tag!r}")
    return ControlProblem(nu, -80.0, 100.0, y_omega=cube_target,
                          source=lambda x: np.full(np.shape(x)[:-1], 10.0),
                          nonlinearity=get_nonlinearity(tag))


def initial_mesh(example):
    """Starting meshes: L-shape with two uniform sweeps, cube with three."""
    if example == 1:
        return meshmod.build_lshape(2)
    if example == 2:
        return meshmod.build_cube(3)
    raise ValueError(f"unknown example {example!r}")


# -- error evaluation and post-processing -------------------------------------

def exact_errors(case, sol):
    """(||grad e_y||, ||grad e_p||, ||e_u||) against the exact solution."""
    mesh = sol.y.mesh
    ey = norms(mesh, sol.y, case.exact_y, case.grad_y).h1
    ep = norms(mesh, sol.p, case.exact_p, case.grad_p).h1
    eu = norms(mesh, sol.u, case.exact_u).l2
    return ey, ep, eu


def fit_rate(records):
    """Least-squares slope of log(value) against log(ndof).

    ``records`` is a sequence of ``(ndof, value)`` pairs.
    """
    data = np.asarray(records, dtype=float)
    if data.ndim != 2 or data.shape[0] < 3:
        raise ValueError("need at least three (ndof, value) pairs")
    if np.any(data <= 0) or not np.all(np.isfinite(data)):
        raise ValueError("ndof and values must be positive and finite")
    return float(np.polyfit(np.log(data[:, 0]), np.log(data[:, 1]), 1)[0])


def effectivity(est_total, err_total):
    """Ratio estimator / error; 0/0 counts as 1 and x/0 as infinity."""
    if err_total < 0 or est_total < 0:
        raise ValueError("estimator and error must be nonnegative")
    if err_total == 0:
        return 1.0 if est_total == 0 else float("inf")
    return est_total / err_total
