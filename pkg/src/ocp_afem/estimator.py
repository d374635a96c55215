"""Residual-type a posteriori error indicators.

All indicator functions return an :class:`IndicatorField` of *squared*
elementwise contributions.  Face jump terms h_T ||[[grad v . n]]||^2_{L2(S)}
are added in full to both elements sharing the face S.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ocp_afem.fem import field_values, gradient_jumps, project_p1_elementwise
from ocp_afem.ocp import project_box
from ocp_afem.quadrature import ERROR_DEGREE, blockwise_integrals, rule

KINDS = ("st", "ad", "ct", "ocp", "semilinear", "competitor_ct", "sg", "osc")


@dataclass
class IndicatorField:
    mesh: object
    values: np.ndarray
    kind: str

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.kind not in KINDS:
            raise ValueError(f"unknown indicator kind {self.kind!r}")
        if self.values.shape != (self.mesh.num_elements,):
            raise ValueError("one indicator value per element expected")
        if not np.all(np.isfinite(self.values)) or np.any(self.values < 0):
            raise ValueError("indicator values must be finite and nonnegative")

    def total(self):
        """Global estimator: square root of the sum of squared indicators."""
        return float(np.sqrt(self.values.sum()))


def _qrule(mesh, degree):
    return rule(mesh.dim, degree or ERROR_DEGREE[mesh.dim])


def _jump_part(mesh, values):
    faces = mesh.interior_faces
    h = mesh.diameters
    j2 = gradient_jumps(mesh, values) ** 2 * faces.measures
    out = np.zeros(mesh.num_elements)
    for side in (0, 1):
        e = faces.elements[:, side]
        out += np.bincount(e, weights=h[e] * j2, minlength=mesh.num_elements)
    return out


def _element_part(mesh, residual, qr):
    """h_T^2 ||r||^2_T with ``residual(sl, x)`` evaluated blockwise."""
    sq = blockwise_integrals(mesh, qr, lambda sl, x: residual(sl, x) ** 2)
    return mesh.diameters ** 2 * sq


def _semilinear_values(mesh, y, source, nonlinearity, qr):
    def residual(sl, x):
        return source(sl, x) - nonlinearity.a(x, y.at_quadrature(qr, sl))

    return _element_part(mesh, residual, qr) + _jump_part(mesh, y.values)


def indicator_semilinear(mesh, y, f, nonlinearity, degree=None):
    """h_T^2 ||f - a(., y)||^2_T + h_T ||[[grad y . n]]||^2_{dT minus boundary}."""
    qr = _qrule(mesh, degree)
    src = lambda sl, x: field_values(mesh, f, qr, sl)
    return IndicatorField(mesh, _semilinear_values(mesh, y, src, nonlinearity, qr),
                          "semilinear")


def indicator_state(mesh, sol, problem, degree=None):
    """State indicator: the semilinear indicator with right-hand side f + u."""
    qr = _qrule(mesh, degree)
    u = sol.u.values

    def src(sl, x):
        return problem.source(x) + u[sl, None]

    vals = _semilinear_values(mesh, sol.y, src, problem.nonlinearity, qr)
    return IndicatorField(mesh, vals, "st")


def indicator_adjoint(mesh, sol, problem, degree=None):
    """h_T^2 ||y - y_d - a_y(., y) p||^2_T plus the jump term of p."""
    qr = _qrule(mesh, degree)
    da = problem.nonlinearity.da_dy

    def residual(sl, x):
        yq = sol.y.at_quadrature(qr, sl)
        return yq - problem.y_omega(x) - da(x, yq) * sol.p.at_quadrature(qr, sl)

    vals = _element_part(mesh, residual, qr) + _jump_part(mesh, sol.p.values)
    return IndicatorField(mesh, vals, "ad")


class PointwiseField:
    """Pointwise function built from a P1 field by a scalar map.

    Can be evaluated at arbitrary points or directly at element quadrature
    points (no point location needed).
    """

    def __init__(self, p, fn):
        self.p = p
        self.fn = fn

    def __call__(self, x):
        return self.fn(self.p(x))

    def at_quadrature(self, qr, sl=slice(None)):
        return self.fn(self.p.at_quadrature(qr, sl))


def control_tilde(mesh, p, problem):
    """Projection of -p/nu onto the admissible box, as a pointwise field."""
    lo, hi, nu = problem.lower, problem.upper, problem.nu
    return PointwiseField(p, lambda v: project_box(-v / nu, lo, hi))


def _l2_mismatch(mesh, field, piecewise_constant, degree):
    qr = _qrule(mesh, degree)
    c = np.asarray(piecewise_constant, dtype=float)
    return blockwise_integrals(
        mesh, qr, lambda sl, x: (field.at_quadrature(qr, sl) - c[sl, None]) ** 2)


def indicator_control(mesh, sol, problem, degree=None):
    """||u~ - u_T||^2_{L2(T)} with u~ the projected rescaled adjoint."""
    ut = control_tilde(mesh, sol.p, problem)
    return IndicatorField(mesh, _l2_mismatch(mesh, ut, sol.u.values, degree), "ct")


def indicator_competitor_control(mesh, sol):
    """h_T^2 ||grad p||^2_{L2(T)} (control part of the comparison estimator)."""
    g = sol.p.gradients()
    vals = mesh.diameters ** 2 * mesh.volumes * (g ** 2).sum(axis=1)
    return IndicatorField(mesh, vals, "competitor_ct")


def indicator_total(st, ad, ct, kind="ocp"):
    """Elementwise sum of three squared indicator fields."""
    if not (st.mesh is ad.mesh is ct.mesh):
        raise ValueError("indicator fields live on different meshes")
    return IndicatorField(st.mesh, st.values + ad.values + ct.values, kind)


def oscillation(mesh, w, degree=None):
    """h_T^2 ||w - P_T w||^2_{L2(T)}, P_T the local L2 projection onto linears."""
    qr = _qrule(mesh, degree)
    coef = project_p1_elementwise(mesh, w, degree)

    def residual(sl, x):
        return field_values(mesh, w, qr, sl) - coef[sl] @ qr.points.T

    return IndicatorField(mesh, _element_part(mesh, residual, qr), "osc")


def sparse_auxiliary(mesh, p, problem):
    """Auxiliary subgradient and control of the L1-regularised problem.

    Returns ``(lam, u)`` with lam = proj_[-1,1](-p/theta) and
    u = proj_[a,b](-(p + theta lam)/nu).
    """
    theta = problem.theta
    if theta is None:
        raise ValueError("the sparse extension needs problem.theta")
    lo, hi, nu = problem.lower, problem.upper, problem.nu

    def lam_of(v):
        return project_box(-v / theta, -1.0, 1.0)

    def u_of(v):
        return project_box(-(v + theta * lam_of(v)) / nu, lo, hi)

    return PointwiseField(p, lam_of), PointwiseField(p, u_of)


def indicator_subgradient(mesh, lam, p, problem, degree=None):
    """||lam~ - lam_T||^2_{L2(T)} for a piecewise constant subgradient."""
    lam_t, _ = sparse_auxiliary(mesh, p, problem)
    return IndicatorField(mesh, _l2_mismatch(mesh, lam_t, lam.values, degree), "sg")


def indicator_control_sparse(mesh, u, p, problem, degree=None):
    _, u_t = sparse_auxiliary(mesh, p, problem)
    return IndicatorField(mesh, _l2_mismatch(mesh, u_t, u.values, degree), "ct")


def estimate(mesh, sol, problem, kind="ours", degree=None):
    """All contributions of the chosen estimator.

    Returns a dict with keys ``st``, ``ad``, ``ct`` and ``total``; for
    ``kind="competitor"`` the control part is h_T ||grad p||_{L2(T)}.
    """
    st = indicator_state(mesh, sol, problem, degree)
    ad = indicator_adjoint(mesh, sol, problem, degree)
    if kind == "ours":
        ct = indicator_control(mesh, sol, problem, degree)
    elif kind == "competitor":
        ct = indicator_competitor_control(mesh, sol)
    else:
        raise ValueError(f"unknown estimator {kind!r}")
    return {"st": st, "ad": ad, "ct": ct, "total": indicator_total(st, ad, ct)}
