"""Symmetric positive quadrature rules on simplices.

Rules are the fully symmetric Xiao-Gimbutas families, stored in barycentric
coordinates.  Weights sum to the volume of the reference simplex (1/2 for the
unit right triangle, 1/6 for the unit right tetrahedron), so the physical
weight on an element is ``w * d! * |T|``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from ocp_afem import _xg_tables

MAX_DEGREE = {2: 19, 3: 14}

#: degree used for errors, estimators and data integrals
ERROR_DEGREE = MAX_DEGREE

#: upper bound on (elements x points) held in memory at once
BLOCK_ENTRIES = 1 << 20


class QuadratureError(ValueError):
    pass


@dataclass(frozen=True)
class QuadRule:
    dim: int
    degree: int
    points: np.ndarray   # barycentric, shape (nq, dim + 1)
    weights: np.ndarray  # shape (nq,), sum = 1/dim!

    def __len__(self):
        return len(self.weights)


@lru_cache(maxsize=None)
def rule(dim, degree):
    """Return a rule on the reference ``dim``-simplex exact for ``degree``.

    The returned rule may have a higher degree than requested.
    """
    if dim not in MAX_DEGREE:
        raise QuadratureError(f"unsupported dimension {dim}")
    if degree > MAX_DEGREE[dim]:
        raise QuadratureError(
            f"no rule of degree {degree} in {dim}D (max {MAX_DEGREE[dim]})")
    table = _xg_tables.TRIANGLE if dim == 2 else _xg_tables.TETRAHEDRON
    deg = max(int(degree), 1)
    pts, wts = table[deg]
    points = np.array(pts)
    points.flags.writeable = False
    weights = np.array(wts)
    weights.flags.writeable = False
    return QuadRule(dim, deg, points, weights)


def blocks(mesh, qr, budget=None):
    """Slices of the element range small enough for blockwise evaluation."""
    step = max(1, (budget or BLOCK_ENTRIES) // len(qr))
    ne = mesh.num_elements
    for start in range(0, ne, step):
        yield slice(start, min(start + step, ne))


def quadrature_points(mesh, qr, sl=slice(None)):
    """Physical quadrature points of the elements ``sl``, shape (ne, nq, d)."""
    return np.einsum("qk,ekd->eqd", qr.points, mesh.vertices[mesh.elements[sl]])


def physical_weights(mesh, qr, sl=slice(None)):
    """Quadrature weights scaled to each element, shape (ne, nq)."""
    return np.outer(mesh.volumes[sl] * factorial(mesh.dim), qr.weights)


def blockwise_integrals(mesh, qr, integrand):
    """Per-element integrals computed block by block.

    ``integrand(sl, x)`` receives an element slice and the physical points
    of those elements and returns values of shape (len(sl), nq).
    """
    out = np.empty(mesh.num_elements)
    for sl in blocks(mesh, qr):
        vals = integrand(sl, quadrature_points(mesh, qr, sl))
        out[sl] = (vals * physical_weights(mesh, qr, sl)).sum(axis=1)
    return out


def element_integrals(mesh, f, degree):
    """Integrate a pointwise function over every element.

    ``f`` receives an array of physical points of shape (ne, nq, d) and must
    return values of shape (ne, nq).
    """
    def checked(sl, x):
        vals = np.asarray(f(x), dtype=float)
        if np.isnan(vals).any():
            raise QuadratureError("integrand returned NaN")
        return vals

    return blockwise_integrals(mesh, rule(mesh.dim, degree), checked)


def integrate(mesh, element, f, degree):
    """Integrate ``f`` (pointwise, physical coordinates) over one element."""
    qr = rule(mesh.dim, degree)
    v = mesh.vertices[mesh.elements[element]]
    x = qr.points @ v
    vals = np.asarray(f(x), dtype=float)
    if np.isnan(vals).any():
        raise QuadratureError(f"integrand returned NaN on element {element}")
    return float(vals @ qr.weights * factorial(mesh.dim) * mesh.volumes[element])
