"""Piecewise linear and piecewise constant finite element machinery.

Assembly is fully vectorised over elements; matrices are returned as
``scipy.sparse.csr_matrix``.  Homogeneous Dirichlet conditions are handled
by symmetric elimination: reduced matrices act on ``mesh.free_vertices``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu
from scipy.spatial import cKDTree

from ocp_afem.mesh import Mesh, MeshError
from ocp_afem.quadrature import (ERROR_DEGREE, blocks, blockwise_integrals,
                                 physical_weights, quadrature_points, rule)


class SolverError(RuntimeError):
    """Singular system or failed linear solve."""


class ConvergenceError(RuntimeError):
    """Nonlinear iteration did not converge; ``history`` holds the norms."""

    def __init__(self, message, history=()):
        super().__init__(message)
        self.history = list(history)


@dataclass
class P1Function:
    """Continuous piecewise linear function given by its nodal values."""

    mesh: Mesh
    values: np.ndarray
    dirichlet: bool = True

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.mesh.num_vertices,):
            raise ValueError("one nodal value per vertex expected")
        if self.dirichlet:
            bnd = self.mesh.boundary_vertices
            if np.any(self.values[bnd] != 0.0):
                raise ValueError("Dirichlet P1Function must vanish on the boundary")

    @classmethod
    def zeros(cls, mesh, dirichlet=True):
        return cls(mesh, np.zeros(mesh.num_vertices), dirichlet)

    def at_quadrature(self, qr, sl=slice(None)):
        """Values at the quadrature points of the elements ``sl``, (ne, nq)."""
        return self.values[self.mesh.elements[sl]] @ qr.points.T

    def gradients(self):
        """Elementwise constant gradients, shape (ne, d)."""
        return np.einsum("ek,ekd->ed", self.values[self.mesh.elements],
                         self.mesh.grad_lambda)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        elem, bary = locate(self.mesh, x.reshape(-1, self.mesh.dim))
        vals = (self.values[self.mesh.elements[elem]] * bary).sum(axis=1)
        return vals.reshape(x.shape[:-1])


@dataclass
class P0Function:
    """Piecewise constant function, one value per element."""

    mesh: Mesh
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.mesh.num_elements,):
            raise ValueError("one value per element expected")

    @classmethod
    def zeros(cls, mesh):
        return cls(mesh, np.zeros(mesh.num_elements))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        elem, _ = locate(self.mesh, x.reshape(-1, self.mesh.dim))
        return self.values[elem].reshape(x.shape[:-1])


def locate(mesh, points, tol=1e-12):
    """Find a containing element and barycentric coordinates for each point."""
    points = np.atleast_2d(points)
    tree = getattr(mesh, "_centroid_tree", None)
    if tree is None:
        tree = mesh._centroid_tree = cKDTree(mesh.centroids)
    verts = mesh.vertices[mesh.elements]

    def bary(elems, pts):
        lam_rest = np.einsum("nkd,nd->nk", mesh.grad_lambda[elems][:, 1:],
                             pts - verts[elems, 0])
        return np.hstack([1 - lam_rest.sum(axis=1, keepdims=True), lam_rest])

    k = min(16, mesh.num_elements)
    _, cand = tree.query(points, k=k)
    cand = cand.reshape(len(points), k)
    found = np.full(len(points), -1)
    out = np.zeros((len(points), mesh.dim + 1))
    for j in range(k):
        todo = np.flatnonzero(found < 0)
        if todo.size == 0:
            break
        lam = bary(cand[todo, j], points[todo])
        ok = lam.min(axis=1) >= -tol
        found[todo[ok]] = cand[todo[ok], j]
        out[todo[ok]] = lam[ok]
    for i in np.flatnonzero(found < 0):
        elems = np.arange(mesh.num_elements)
        lam = bary(elems, np.repeat(points[i:i + 1], len(elems), axis=0))
        best = int(lam.min(axis=1).argmax())
        if lam[best].min() < -1e-9:
            raise ValueError(f"point {points[i]} lies outside the mesh")
        found[i], out[i] = best, lam[best]
    return found, out


# -- assembly --------------------------------------------------------------

def _check_volumes(mesh):
    bad = np.flatnonzero(mesh.volumes <= 1e-14 * mesh.diameters ** mesh.dim)
    if bad.size:
        raise MeshError(f"element {bad[0]} is degenerate (zero volume)")


def _scatter(mesh, local):
    t = mesh.elements
    k = t.shape[1]
    rows = np.repeat(t, k, axis=1).ravel()
    cols = np.tile(t, (1, k)).ravel()
    n = mesh.num_vertices
    return sp.coo_matrix((local.ravel(), (rows, cols)), shape=(n, n)).tocsr()


def _reduce(mesh, A, dirichlet):
    if not dirichlet:
        return A
    free = mesh.free_vertices
    return A[free][:, free].tocsr()


def local_stiffness(mesh):
    g = mesh.grad_lambda
    return mesh.volumes[:, None, None] * np.einsum("eid,ejd->eij", g, g)


def local_mass(mesh):
    d = mesh.dim
    ref = (np.ones((d + 1, d + 1)) + np.eye(d + 1)) / ((d + 1) * (d + 2))
    return mesh.volumes[:, None, None] * ref


def assemble_stiffness(mesh, dirichlet=False):
    """Stiffness matrix with entries (grad phi_i, grad phi_j)."""
    _check_volumes(mesh)
    return _reduce(mesh, _scatter(mesh, local_stiffness(mesh)), dirichlet)


def assemble_mass_p1(mesh, dirichlet=False):
    """Consistent P1 mass matrix with entries (phi_i, phi_j)."""
    _check_volumes(mesh)
    return _reduce(mesh, _scatter(mesh, local_mass(mesh)), dirichlet)


def assemble_weighted_mass(mesh, weight, qr, dirichlet=False):
    """Matrix with entries (g phi_i, phi_j) for ``g`` given at quadrature points.

    ``weight`` has shape (ne, nq).
    """
    w = weight * physical_weights(mesh, qr)
    local = np.einsum("eq,qi,qj->eij", w, qr.points, qr.points)
    return _reduce(mesh, _scatter(mesh, local), dirichlet)


def assemble_load(mesh, values, qr):
    """Vector with entries (g, phi_i) for ``g`` given at quadrature points."""
    w = values * physical_weights(mesh, qr)
    local = w @ qr.points
    return np.bincount(mesh.elements.ravel(), weights=local.ravel(),
                       minlength=mesh.num_vertices)


def p0_coupling(mesh):
    """Matrix B with B[i, T] = (1_T, phi_i) = |T| / (d + 1)."""
    ne, k = mesh.elements.shape
    vals = np.repeat(mesh.volumes / k, k)
    return sp.csr_matrix((vals, (mesh.elements.ravel(), np.repeat(np.arange(ne), k))),
                         shape=(mesh.num_vertices, ne))


def p0_mean(mesh):
    """Matrix P mapping nodal values to elementwise means (Pi_T)."""
    ne, k = mesh.elements.shape
    return sp.csr_matrix((np.full(ne * k, 1.0 / k),
                          (np.repeat(np.arange(ne), k), mesh.elements.ravel())),
                         shape=(ne, mesh.num_vertices))


def evaluate(f, mesh, qr, sl=slice(None)):
    """Evaluate a pointwise callable at the quadrature points, (ne, nq)."""
    x = quadrature_points(mesh, qr, sl)
    return np.broadcast_to(np.asarray(f(x), dtype=float), x.shape[:2])


def field_values(mesh, w, qr, sl=slice(None)):
    """Values of a discrete field, quadrature-aware object or callable.

    ``None`` stands for the zero function.
    """
    if w is None:
        return 0.0
    if isinstance(w, P0Function):
        return w.values[sl, None]
    if hasattr(w, "at_quadrature"):
        return w.at_quadrature(qr, sl)
    return evaluate(w, mesh, qr, sl)


def assemble_data_load(mesh, f, qr):
    """Load vector (f, phi_i) for a field or callable, assembled blockwise."""
    out = np.zeros(mesh.num_vertices)
    for sl in blocks(mesh, qr):
        w = field_values(mesh, f, qr, sl) * physical_weights(mesh, qr, sl)
        local = w @ qr.points
        out += np.bincount(mesh.elements[sl].ravel(), weights=local.ravel(),
                           minlength=mesh.num_vertices)
    return out


# -- linear and nonlinear solves ------------------------------------------

def solve_sparse(A, b):
    """Direct sparse solve with a residual contract.

    Raises
    ------
    SolverError
        If ``A`` is not square, is numerically singular, or the residual
        ``||Ax - b||`` exceeds ``1e-10 (||A||_max ||x|| + ||b||)``.
    """
    A = sp.csc_matrix(A)
    b = np.asarray(b, dtype=float)
    if A.shape[0] != A.shape[1] or A.shape[0] != b.shape[0]:
        raise SolverError(f"incompatible system: A {A.shape}, b {b.shape}")
    try:
        lu = splu(A)
    except RuntimeError as exc:
        raise SolverError(f"matrix is singular: {exc}") from None
    piv = np.abs(lu.U.diagonal())
    ratio = piv.min() / piv.max() if piv.size and piv.max() > 0 else 0.0
    if ratio < 1e-15:
        raise SolverError(f"matrix is numerically singular (pivot ratio {ratio:.2e})")
    x = lu.solve(b)
    amax = abs(A).max() if A.nnz else 0.0
    for _ in range(3):
        r = b - A @ x
        if np.linalg.norm(r) <= 1e-10 * (amax * np.linalg.norm(x) + np.linalg.norm(b)):
            return x
        x = x + lu.solve(r)
    raise SolverError(
        f"residual contract violated (pivot ratio {ratio:.2e}); system ill-conditioned")


def assembly_degree(nonlinearity, dim):
    return min(max(2, nonlinearity.quad_degree), ERROR_DEGREE[dim])


def semilinear_solve(mesh, nonlinearity, rhs, guess=None, degree=None,
                     tol=1e-10, max_iter=50):
    """Galerkin solution of -Δy + a(x, y) = f with y = 0 on the boundary.

    Newton's method with residual-halving line search.  The right-hand side
    is integrated with the high-degree data rule, the nonlinear term with
    ``degree`` (default: :func:`assembly_degree`).
    """
    free = mesh.free_vertices
    K = assemble_stiffness(mesh, dirichlet=True)
    qd = rule(mesh.dim, ERROR_DEGREE[mesh.dim])
    F = assemble_data_load(mesh, rhs, qd)[free]
    qr = rule(mesh.dim, degree or assembly_degree(nonlinearity, mesh.dim))
    x = quadrature_points(mesh, qr)

    y = np.zeros(mesh.num_vertices) if guess is None else guess.values.copy()
    y[mesh.boundary_vertices] = 0.0

    def residual(yv):
        yq = yv[mesh.elements] @ qr.points.T
        return K @ yv[free] + assemble_load(mesh, nonlinearity.a(x, yq), qr)[free] - F

    res = residual(y)
    history = [float(np.abs(res).max(initial=0.0))]
    for _ in range(max_iter):
        if history[-1] <= tol:
            return P1Function(mesh, y)
        yq = y[mesh.elements] @ qr.points.T
        J = K + assemble_weighted_mass(mesh, nonlinearity.da_dy(x, yq), qr, True)
        step = solve_sparse(J, -res)
        t = 1.0
        for _ in range(31):
            trial = y.copy()
            trial[free] += t * step
            new = residual(trial)
            if np.abs(new).max(initial=0.0) < history[-1] or t < 1e-9:
                break
            t *= 0.5
        y, res = trial, new
        history.append(float(np.abs(res).max(initial=0.0)))
    if history[-1] <= tol:
        return P1Function(mesh, y)
    raise ConvergenceError(f"semilinear Newton did not converge in {max_iter} "
                           f"iterations (residual {history[-1]:.3e})", history)


# -- projections, jumps, norms --------------------------------------------

def interpolate_p1(mesh, f, dirichlet=True):
    """Nodal interpolant of a pointwise callable."""
    vals = np.asarray(f(mesh.vertices), dtype=float).copy()
    if dirichlet:
        vals[mesh.boundary_vertices] = 0.0
    return P1Function(mesh, vals, dirichlet)


def project_p0(mesh, f, degree=None):
    """Elementwise L2 projection onto constants."""
    if isinstance(f, P1Function):
        return P0Function(mesh, f.values[mesh.elements].mean(axis=1))
    qr = rule(mesh.dim, degree or ERROR_DEGREE[mesh.dim])
    means = blockwise_integrals(mesh, qr, lambda sl, x: field_values(mesh, f, qr, sl))
    return P0Function(mesh, means / mesh.volumes)


def project_p1_elementwise(mesh, f, degree=None):
    """Discontinuous elementwise L2 projection onto linears.

    Returns the vertex values of the local fit, shape (ne, d + 1).
    """
    qr = rule(mesh.dim, degree or ERROR_DEGREE[mesh.dim])
    b = np.empty(mesh.elements.shape)
    for sl in blocks(mesh, qr):
        b[sl] = (field_values(mesh, f, qr, sl) * physical_weights(mesh, qr, sl)) @ qr.points
    d = mesh.dim
    # inverse of the local mass matrix |T| (I + 11^T) / ((d+1)(d+2))
    return ((d + 1) * (d + 2) / mesh.volumes[:, None]) * (
        b - b.sum(axis=1, keepdims=True) / (d + 2))


def gradient_jumps(mesh, values):
    """Normal gradient jumps of a P1 field across every interior face."""
    g = np.einsum("ek,ekd->ed", np.asarray(values)[mesh.elements], mesh.grad_lambda)
    f = mesh.interior_faces
    return ((g[f.elements[:, 0]] - g[f.elements[:, 1]]) * f.normals).sum(axis=1)


def gradient_jump(mesh, v, face):
    """Jump of the normal derivative of ``v`` across one interior face.

    ``face`` is an index into ``mesh.interior_faces`` or a tuple of vertex
    indices.
    """
    faces = mesh.interior_faces
    if not isinstance(face, (int, np.integer)):
        key = np.sort(np.asarray(face))
        hit = np.flatnonzero((faces.vertices == key).all(axis=1))
        if hit.size == 0:
            raise MeshError(f"face {tuple(face)} is not an interior face")
        face = int(hit[0])
    g = v.gradients()
    plus, minus = faces.elements[face]
    return float((g[plus] - g[minus]) @ faces.normals[face])


class Norms(NamedTuple):
    l2: float
    h1: float
    linf: float


def _grad_at(mesh, w, grad_w, qr, sl):
    if w is None or isinstance(w, P0Function):
        return 0.0
    if isinstance(w, P1Function):
        return w.gradients()[sl, None, :]
    if grad_w is None:
        return None
    return np.asarray(grad_w(quadrature_points(mesh, qr, sl)), dtype=float)


def norms(mesh, v, w=None, grad_w=None, degree=None):
    """L2 norm, H1 seminorm and nodal max norm of ``v - w``.

    ``v`` is a P1 or P0 function; ``w`` may be None, a discrete function or
    a pointwise callable (pass ``grad_w`` for the H1 seminorm).  The H1
    seminorm is NaN when it is not defined.
    """
    qr = rule(mesh.dim, degree or ERROR_DEGREE[mesh.dim])
    l2sq = h1sq = 0.0
    linf = 0.0
    for sl in blocks(mesh, qr):
        W = physical_weights(mesh, qr, sl)
        diff = field_values(mesh, v, qr, sl) - field_values(mesh, w, qr, sl)
        l2sq += float((diff ** 2 * W).sum())
        if not isinstance(v, P1Function):
            linf = max(linf, float(np.abs(diff).max(initial=0.0)))
        gw = _grad_at(mesh, w, grad_w, qr, sl)
        if isinstance(v, P1Function) and gw is not None:
            gd = np.broadcast_to(_grad_at(mesh, v, None, qr, sl) - gw, W.shape + (mesh.dim,))
            h1sq += float(((gd ** 2).sum(axis=2) * W).sum())
        else:
            h1sq = float("nan")

    if isinstance(v, P1Function):
        if isinstance(w, P1Function):
            wn = w.values
        elif w is None:
            wn = 0.0
        else:
            wn = np.asarray(w(mesh.vertices), dtype=float)
        linf = float(np.abs(v.values - wn).max())
    return Norms(float(np.sqrt(l2sq)), float(np.sqrt(h1sq)), linf)


# -- transfer between nested meshes ----------------------------------------

def prolong_p1(f, new_mesh):
    """Interpolate a P1 field onto a refinement of its mesh (exact)."""
    old = f.values
    vals = np.zeros(new_mesh.num_vertices)
    vals[:len(old)] = old
    vp = new_mesh.vertex_parents
    for start, stop in new_mesh.vertex_batches:
        vals[start:stop] = 0.5 * (vals[vp[start:stop, 0]] + vals[vp[start:stop, 1]])
    return P1Function(new_mesh, vals, f.dirichlet)


def prolong_p0(f, new_mesh):
    """Children inherit the value of their parent element."""
    return P0Function(new_mesh, f.values[new_mesh.parent])
