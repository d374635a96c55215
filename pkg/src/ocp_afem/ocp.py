"""Control-constrained semilinear optimal control: problem data and solvers.

The discrete optimality system for (y, p, u) in V x V x U, with V the P1
space with homogeneous Dirichlet conditions and U the P0 space, is solved by
a primal-dual active set loop whose inner problems are solved by Newton's
method on the operator

    F1(y, p, u) = (grad y, grad v) + (a(., y) - u - f, v)
    F2(y, p, u) = (grad w, grad p) + (a_y(., y) p - y + y_d, w)
    F3(y, p, u) = Pi_T(p) (1 - chi_a - chi_b) / nu + u - a chi_a - b chi_b

with the active sets (chi_a, chi_b) held fixed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np
import scipy.sparse as sp

from ocp_afem.fem import (ConvergenceError, P0Function, P1Function,
                          assemble_data_load, assemble_load, assemble_mass_p1,
                          assemble_stiffness, assemble_weighted_mass,
                          assembly_degree, p0_coupling, p0_mean, solve_sparse)
from ocp_afem.quadrature import (ERROR_DEGREE, blockwise_integrals,
                                 quadrature_points, rule)

log = logging.getLogger(__name__)


def _zero(x):
    return np.zeros(np.shape(x)[:-1])


@dataclass(frozen=True)
class Nonlinearity:
    """Monotone nonlinearity a(x, y) with its first two y-derivatives.

    ``quad_degree`` is the polynomial degree used when integrating terms
    such as (a(., y), v) during assembly.
    """

    name: str
    a: Callable
    da_dy: Callable
    d2a_dy2: Callable
    quad_degree: int = 2


def zero():
    z = lambda x, y: np.zeros_like(y, dtype=float)
    return Nonlinearity("zero", z, z, z, 2)


def linear(c):
    if c < 0:
        raise ValueError("a(x, y) = c y is monotone only for c >= 0")
    return Nonlinearity(f"linear({c:g})", lambda x, y: c * y,
                        lambda x, y: np.full_like(y, c, dtype=float),
                        lambda x, y: np.zeros_like(y, dtype=float), 2)


def arctan():
    return Nonlinearity("arctan", lambda x, y: np.arctan(y),
                        lambda x, y: 1.0 / (1.0 + y * y),
                        lambda x, y: -2.0 * y / (1.0 + y * y) ** 2, 4)


def cubic():
    """a1(y) = 10 y^3 - 2."""
    return Nonlinearity("a1", lambda x, y: 10.0 * y ** 3 - 2.0,
                        lambda x, y: 30.0 * y ** 2,
                        lambda x, y: 60.0 * y, 4)


def steep_arctan():
    """a2(y) = 10 arctan(80 y) - 5."""
    return Nonlinearity("a2", lambda x, y: 10.0 * np.arctan(80.0 * y) - 5.0,
                        lambda x, y: 800.0 / (1.0 + 6400.0 * y * y),
                        lambda x, y: -10240000.0 * y / (1.0 + 6400.0 * y * y) ** 2,
                        6)


def hyperbolic():
    """a3(y) = 10 sinh(3 y) - 2."""
    return Nonlinearity("a3", lambda x, y: 10.0 * np.sinh(3.0 * y) - 2.0,
                        lambda x, y: 30.0 * np.cosh(3.0 * y),
                        lambda x, y: 90.0 * np.sinh(3.0 * y), 4)


CATALOG = {"zero": zero, "arctan": arctan, "a1": cubic, "a2": steep_arctan,
           "a3": hyperbolic}


def get_nonlinearity(tag):
    if tag.startswith("linear(") and tag.endswith(")"):
        return linear(float(tag[7:-1]))
    try:
        return CATALOG[tag]()
    except KeyError:
        raise ValueError(f"unknown nonlinearity {tag!r}") from None


@dataclass(frozen=True)
class ControlProblem:
    """Data of min 1/2||y - y_d||^2 + nu/2||u||^2 subject to the state
    equation -Δy + a(., y) = f + u and lower <= u <= upper."""

    nu: float
    lower: float
    upper: float
    y_omega: Callable = _zero
    source: Callable = _zero
    nonlinearity: Nonlinearity = field(default_factory=zero)
    theta: Optional[float] = None

    def __post_init__(self):
        if not self.nu > 0:
            raise ValueError("nu must be positive")
        if not self.lower < self.upper:
            raise ValueError("lower bound must be smaller than upper bound")
        if self.theta is not None and not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass
class KktSolution:
    y: P1Function
    p: P1Function
    u: P0Function
    active_lower: P0Function
    active_upper: P0Function
    newton_iters: int = 0
    active_set_iters: int = 0

    @property
    def mesh(self):
        return self.y.mesh


def project_box(v, lower, upper):
    """Pointwise projection min(upper, max(v, lower))."""
    if lower > upper:
        raise ValueError("lower bound exceeds upper bound")
    out = np.minimum(upper, np.maximum(v, lower))
    return float(out) if np.ndim(out) == 0 else out


def cost(problem, y, u, degree=None):
    """Cost functional evaluated with the high-degree rule."""
    mesh = y.mesh
    qr = rule(mesh.dim, degree or ERROR_DEGREE[mesh.dim])
    misfit = blockwise_integrals(
        mesh, qr, lambda sl, x: (y.at_quadrature(qr, sl) - problem.y_omega(x)) ** 2)
    return float(0.5 * misfit.sum()
                 + 0.5 * problem.nu * (u.values ** 2 * mesh.volumes).sum())


class KktResidual(NamedTuple):
    state: np.ndarray
    adjoint: np.ndarray
    control: np.ndarray

    def max_norm(self):
        return max(float(np.abs(b).max(initial=0.0)) for b in self)


class KktSystem:
    """Mesh-dependent operators of the discrete optimality system.

    Matrices and data load vectors are assembled once; nonlinear terms are
    reassembled at every Newton step with the assembly rule.
    """

    def __init__(self, problem, mesh, degree=None):
        self.problem = problem
        self.mesh = mesh
        self.free = mesh.free_vertices
        free = self.free
        self.K = assemble_stiffness(mesh, dirichlet=True)
        self.M = assemble_mass_p1(mesh, dirichlet=True)
        self.B = p0_coupling(mesh)[free]        # (phi_i, 1_T)
        self.P = p0_mean(mesh)[:, free]         # Pi_T on nodal values
        qd = rule(mesh.dim, ERROR_DEGREE[mesh.dim])
        self.F = assemble_data_load(mesh, problem.source, qd)[free]
        self.G = assemble_data_load(mesh, problem.y_omega, qd)[free]
        nl = problem.nonlinearity
        self.qr = rule(mesh.dim, degree or assembly_degree(nl, mesh.dim))
        self.x = quadrature_points(mesh, self.qr)

    def _full(self, v):
        out = np.zeros(self.mesh.num_vertices)
        out[self.free] = v
        return out

    def _at_qp(self, v):
        return self._full(v)[self.mesh.elements] @ self.qr.points.T

    def residual(self, y, p, u, chi_a, chi_b):
        """Residual blocks on free nodes (state, adjoint) and elements."""
        pb = self.problem
        nl = pb.nonlinearity
        yq, pq = self._at_qp(y), self._at_qp(p)
        load = lambda g: assemble_load(self.mesh, g, self.qr)[self.free]
        r1 = self.K @ y + load(nl.a(self.x, yq)) - self.B @ u - self.F
        r2 = self.K @ p + load(nl.da_dy(self.x, yq) * pq) - self.M @ y + self.G
        inactive = 1.0 - chi_a - chi_b
        r3 = (inactive * (self.P @ p) / pb.nu + u
              - pb.lower * chi_a - pb.upper * chi_b)
        return KktResidual(r1, r2, r3)

    def newton_matrix(self, y, p, chi_a, chi_b):
        """Jacobian with the control increment eliminated.

        From the third block, du = -r3 - D P dp / nu with D the inactive
        indicator, which leaves a 2x2 block system in (dy, dp).
        """
        pb = self.problem
        nl = pb.nonlinearity
        yq, pq = self._at_qp(y), self._at_qp(p)
        Ma = self._weighted(nl.da_dy(self.x, yq))
        Mb = self._weighted(nl.d2a_dy2(self.x, yq) * pq)
        inactive = 1.0 - chi_a - chi_b
        BDP = (self.B @ sp.diags(inactive / pb.nu) @ self.P).tocsr()
        A = self.K + Ma
        return sp.bmat([[A, BDP], [Mb - self.M, A]], format="csc")

    def _weighted(self, g):
        return assemble_weighted_mass(self.mesh, g, self.qr)[self.free][:, self.free]


def _active_arrays(mesh, active):
    if active is None:
        z = np.zeros(mesh.num_elements)
        return z, z.copy()
    chi_a, chi_b = (np.asarray(getattr(c, "values", c), dtype=float) for c in active)
    if chi_a.shape != (mesh.num_elements,) or chi_b.shape != (mesh.num_elements,):
        raise ValueError("active set indicators must have one entry per element")
    return chi_a, chi_b


def kkt_residual(problem, mesh, state, active=None, system=None):
    """Residual of the discrete optimality system at ``state = (y, p, u)``.

    The state and adjoint blocks are tested against the hat functions of
    interior vertices; the control block is elementwise.
    """
    y, p, u = state
    for f, n in ((y, mesh.num_vertices), (p, mesh.num_vertices), (u, mesh.num_elements)):
        if f.mesh is not mesh or f.values.shape != (n,):
            raise ValueError("fields do not live on the given mesh")
    chi_a, chi_b = _active_arrays(mesh, active)
    system = system or KktSystem(problem, mesh)
    free = mesh.free_vertices
    return system.residual(y.values[free], p.values[free], u.values, chi_a, chi_b)


class NewtonResult(NamedTuple):
    y: P1Function
    p: P1Function
    u: P0Function
    iterations: int
    increments: list


def newton_kkt(problem, mesh, active=None, guess=None, tol=1e-8, max_iter=50,
               system=None):
    """Newton's method for the optimality system with fixed active sets.

    Stops when the max-norm of the undamped increment is below
    ``tol * max(1, |y|, |p|, |u|)`` (max norms), so that large solutions are
    not held to an absolute round-off floor.  A residual-halving line search
    is used only when a full step increases the residual norm.
    """
    chi_a, chi_b = _active_arrays(mesh, active)
    system = system or KktSystem(problem, mesh)
    free = mesh.free_vertices
    n = free.size
    if guess is None:
        y, p, u = np.zeros(n), np.zeros(n), np.zeros(mesh.num_elements)
    else:
        y, p, u = (guess[0].values[free].copy(), guess[1].values[free].copy(),
                   guess[2].values.copy())

    res = system.residual(y, p, u, chi_a, chi_b)
    rnorm = res.max_norm()
    increments = []
    for k in range(1, max_iter + 1):
        J = system.newton_matrix(y, p, chi_a, chi_b)
        rhs = np.concatenate([-res.state - system.B @ res.control, -res.adjoint])
        sol = solve_sparse(J, rhs)
        dy, dp = sol[:n], sol[n:]
        du = -res.control - (1.0 - chi_a - chi_b) * (system.P @ dp) / problem.nu
        step = max(np.abs(dy).max(initial=0.0), np.abs(dp).max(initial=0.0),
                   np.abs(du).max(initial=0.0))
        scale = max(1.0, np.abs(y).max(initial=0.0), np.abs(p).max(initial=0.0),
                    np.abs(u).max(initial=0.0))
        converged = step < tol * scale
        t = 1.0
        while True:
            trial = (y + t * dy, p + t * dp, u + t * du)
            new = system.residual(*trial, chi_a, chi_b)
            if (converged or new.max_norm() <= rnorm or t < 2.0 ** -30
                    or new.max_norm() < 1e-12):
                break
            t *= 0.5
        y, p, u = trial
        res, rnorm = new, new.max_norm()
        increments.append(float(step))
        log.debug("newton %d: step %.3e scale %.3e t %.3g residual %.3e", k, step, scale, t, rnorm)
        if converged:
            return NewtonResult(_p1(mesh, y), _p1(mesh, p), P0Function(mesh, u),
                                k, increments)
    raise ConvergenceError(f"Newton did not converge in {max_iter} iterations "
                           f"(last increment {increments[-1]:.3e})", increments)


def _p1(mesh, v):
    out = np.zeros(mesh.num_vertices)
    out[mesh.free_vertices] = v
    return P1Function(mesh, out)


def active_sets(problem, mesh, p):
    """Indicator arrays (chi_a, chi_b) of -Pi_T(p)/nu < lower and > upper."""
    w = -(p.values[mesh.elements].mean(axis=1)) / problem.nu
    return (w < problem.lower).astype(float), (w > problem.upper).astype(float)


def active_set_solve(problem, mesh, guess=None, max_outer=100, tol=1e-8,
                     degree=None, active=None):
    """Primal-dual active set loop around :func:`newton_kkt`.

    Starts from ``active`` (all-inactive by default).  After every Newton
    solve the sets are recomputed from the elementwise means of p; the loop
    stops when they do not change.  The returned control is clamped to the
    box, which only removes round-off on active elements.
    """
    system = KktSystem(problem, mesh, degree)
    chi_a, chi_b = _active_arrays(mesh, active)
    newton_total = 0
    for j in range(1, max_outer + 1):
        res = newton_kkt(problem, mesh, (chi_a, chi_b), guess, tol=tol, system=system)
        newton_total += res.iterations
        guess = (res.y, res.p, res.u)
        new_a, new_b = active_sets(problem, mesh, res.p)
        changed = int(np.abs(new_a - chi_a).sum() + np.abs(new_b - chi_b).sum())
        log.debug("active set iteration %d: %d changes, %d Newton steps",
                  j, changed, res.iterations)
        chi_a, chi_b = new_a, new_b
        if changed == 0:
            u = project_box(res.u.values, problem.lower, problem.upper)
            return KktSolution(res.y, res.p, P0Function(mesh, u),
                               P0Function(mesh, chi_a), P0Function(mesh, chi_b),
                               newton_total, j)
    raise ConvergenceError(f"active set strategy did not settle in {max_outer} "
                           "iterations (cycling)")
