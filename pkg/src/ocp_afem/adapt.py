"""The adaptive loop: solve, estimate, mark, refine."""
from __future__ import annotations

import csv
import logging
import math
import time
from dataclasses import dataclass

import numpy as np

from ocp_afem.estimator import IndicatorField, estimate, oscillation
from ocp_afem.fem import ConvergenceError, prolong_p0, prolong_p1
from ocp_afem.mesh import refine, uniform_refine
from ocp_afem.ocp import active_set_solve, active_sets

log = logging.getLogger(__name__)

CSV_COLUMNS = ("iter", "ndof", "est_st", "est_ad", "est_ct", "est_total",
               "err_y_h1", "err_p_h1", "err_u_l2", "err_total", "effectivity",
               "seconds")


@dataclass
class AdaptRecord:
    """One row of the convergence history.

    Error fields are NaN when no exact solution is available.
    """

    iteration: int
    ndof: int
    est_st: float
    est_ad: float
    est_ct: float
    est_total: float
    err_y_h1: float = math.nan
    err_p_h1: float = math.nan
    err_u_l2: float = math.nan
    err_total: float = math.nan
    effectivity: float = math.nan
    wall_time: float = 0.0
    estimator: str = "ours"
    osc: float = math.nan
    marked: int = 0

    def as_row(self):
        return [self.iteration, self.ndof] + [
            repr(float(v)) for v in (self.est_st, self.est_ad, self.est_ct,
                                     self.est_total, self.err_y_h1, self.err_p_h1,
                                     self.err_u_l2, self.err_total,
                                     self.effectivity, self.wall_time)]


def count_dofs(mesh):
    """Interior vertices for state and adjoint plus one control per element."""
    return 2 * mesh.free_vertices.size + mesh.num_elements


def mark_max(indicators):
    """Maximum strategy: elements with E_T^2 > max E^2 / 2.

    If the strict rule marks nothing while the maximum is positive (all
    values equal), every element attaining the maximum is marked.  An
    all-zero field marks nothing.
    """
    if not isinstance(indicators, IndicatorField):
        indicators = np.asarray(indicators, dtype=float)
        vals = indicators
    else:
        vals = indicators.values
    if vals.size == 0:
        raise ValueError("empty indicator field")
    top = vals.max()
    if top <= 0:
        return set()
    marked = np.flatnonzero(vals > 0.5 * top)
    if marked.size == 0:
        marked = np.flatnonzero(vals == top)
    return set(marked.tolist())


@dataclass
class AdaptConfig:
    max_iters: int = 10
    estimator: str = "ours"
    refinement: str = "adaptive"
    warm_start: bool = True
    exact: object = None          # ManufacturedCase or None
    quad_degree: int = None       # assembly rule override
    vtk_dir: str = None
    stop_tol: float = 1e-12


def adaptive_loop(problem, mesh, config=None, callback=None):
    """Run the adaptive (or uniform) refinement loop.

    Returns
    -------
    records : list of AdaptRecord
    solution : KktSolution on the final mesh
    """
    from ocp_afem.bench import effectivity, exact_errors

    cfg = config or AdaptConfig()
    if cfg.max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    if cfg.estimator not in ("ours", "competitor"):
        raise ValueError(f"unknown estimator {cfg.estimator!r}")
    if cfg.refinement not in ("adaptive", "uniform"):
        raise ValueError(f"unknown refinement {cfg.refinement!r}")

    records, guess, active, sol = [], None, None, None
    for it in range(1, cfg.max_iters + 1):
        t0 = time.perf_counter()
        try:
            sol = active_set_solve(problem, mesh, guess, degree=cfg.quad_degree,
                                   active=active)
        except ConvergenceError as exc:
            raise ConvergenceError(f"iteration {it}: {exc}", exc.history) from exc
        est = estimate(mesh, sol, problem, cfg.estimator)
        rec = AdaptRecord(it, count_dofs(mesh), est["st"].total(), est["ad"].total(),
                          est["ct"].total(), est["total"].total(),
                          estimator=cfg.estimator)
        if cfg.exact is not None:
            ey, ep, eu = exact_errors(cfg.exact, sol)
            rec.err_y_h1, rec.err_p_h1, rec.err_u_l2 = ey, ep, eu
            rec.err_total = ey + ep + eu
            rec.effectivity = effectivity(rec.est_total, rec.err_total)
            rec.osc = oscillation(mesh, problem.y_omega).total()
        if cfg.vtk_dir is not None:
            mesh.write_vtk(f"{cfg.vtk_dir}/mesh_{it}.vtk",
                           cell_data={"u": sol.u.values,
                                      "indicator": est["total"].values},
                           point_data={"y": sol.y.values, "p": sol.p.values})
        done = rec.est_total <= cfg.stop_tol or it == cfg.max_iters
        if not done:
            if cfg.refinement == "uniform":
                new_mesh = uniform_refine(mesh)
            else:
                marked = mark_max(est["total"])
                rec.marked = len(marked)
                new_mesh = refine(mesh, marked)
            if callback is not None:
                callback(rec, mesh, sol, est)
            if cfg.warm_start:
                # active sets seeded from the prolonged adjoint
                guess = (prolong_p1(sol.y, new_mesh), prolong_p1(sol.p, new_mesh),
                         prolong_p0(sol.u, new_mesh))
                active = active_sets(problem, new_mesh, guess[1])
        elif callback is not None:
            callback(rec, mesh, sol, est)
        rec.wall_time = time.perf_counter() - t0
        records.append(rec)
        log.info("iter %2d ndof %7d E %.3e err %.3e", it, rec.ndof, rec.est_total,
                 rec.err_total)
        if done:
            break
        mesh = new_mesh
    return records, sol


def write_csv(records, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.as_row())


def read_csv(path):
    out = []
    with open(path, newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows)
        if tuple(header) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header {header}")
        for row in rows:
            vals = [float(v) for v in row[2:]]
            out.append(AdaptRecord(int(row[0]), int(row[1]), *vals[:4],
                                   *vals[4:9], wall_time=vals[9]))
    return out
