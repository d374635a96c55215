"""Acceptance checks for the solver, estimator and adaptive loop.

Each ``criterion_N`` function returns a :class:`CheckResult`.  Experiment
runs shared between criteria are computed once per process and cached.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import factorial

import numpy as np

from ocp_afem import bench, fem, mesh as meshmod, ocp, quadrature
from ocp_afem.adapt import AdaptConfig, adaptive_loop, mark_max
from ocp_afem.estimator import IndicatorField, estimate

TOL_RATE_2D = 0.10
TOL_RATE_UNIFORM = 0.08
TOL_RATE_3D = 0.10


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name} ({self.detail})"


# -- shared runs ---------------------------------------------------------------

RUNS = {
    "ex1_adaptive": dict(example=1, nu=1e-3, iters=24),
    "ex1_uniform": dict(example=1, nu=1e-3, iters=7, refinement="uniform"),
    "ex1_nu4": dict(example=1, nu=1e-4, iters=24),
    "ex1_nu5": dict(example=1, nu=1e-5, iters=24),
    "ex1_nu4_competitor": dict(example=1, nu=1e-4, iters=24, estimator="competitor"),
    "ex2_a1": dict(example=2, tag="a1", iters=12),
    "ex2_a2": dict(example=2, tag="a2", iters=12),
    "ex2_a3": dict(example=2, tag="a3", iters=12),
}


def execute(key):
    """Run one registered experiment and return its records."""
    setup = RUNS[key]
    if setup["example"] == 1:
        case = bench.example1(setup["nu"])
        problem = case.problem
    else:
        case, problem = None, bench.example2(setup["tag"])
    cfg = AdaptConfig(setup["iters"], setup.get("estimator", "ours"),
                      setup.get("refinement", "adaptive"), exact=case)
    records, _ = adaptive_loop(problem, bench.initial_mesh(setup["example"]), cfg)
    return records


_cache = {}


def records_for(key):
    if key not in _cache:
        _cache[key] = execute(key)
    return _cache[key]


def prefetch(keys, jobs=1):
    """Compute several runs, optionally in worker processes."""
    todo = [k for k in keys if k not in _cache]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for k, recs in zip(todo, pool.map(execute, todo)):
                _cache[k] = recs
    else:
        for k in todo:
            records_for(k)


def _slope(records, name, window):
    return bench.fit_rate([(r.ndof, getattr(r, name)) for r in records[-window:]])


# -- criteria -----------------------------------------------------------------

def _monomial_exact(alpha, dim):
    # integral of x^a y^b (z^c) over the unit right simplex
    return np.prod([factorial(a) for a in alpha]) / factorial(sum(alpha) + dim)


def criterion_1():
    worst = 0.0
    for dim in (2, 3):
        for deg in range(1, quadrature.MAX_DEGREE[dim] + 1):
            qr = quadrature.rule(dim, deg)
            x = qr.points[:, 1:]
            for alpha in product(range(deg + 1), repeat=dim):
                if sum(alpha) > deg:
                    continue
                approx = qr.weights @ np.prod(x ** np.array(alpha), axis=1)
                exact = _monomial_exact(alpha, dim)
                worst = max(worst, abs(approx - exact) / exact)
    return CheckResult(1, "quadrature exactness", worst <= 1e-12,
                       f"max relative error {worst:.2e}")


def criterion_2():
    ref = meshmod.build_reference(2)
    K = fem.assemble_stiffness(ref).toarray()
    M = fem.assemble_mass_p1(ref).toarray()
    K_hand = np.array([[1.0, -0.5, -0.5], [-0.5, 0.5, 0.0], [-0.5, 0.0, 0.5]])
    M_hand = np.array([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]) / 24.0
    ref3 = meshmod.build_reference(3)
    K3 = fem.assemble_stiffness(ref3).toarray()
    K3_hand = np.array([[3.0, -1, -1, -1], [-1, 1, 0, 0], [-1, 0, 1, 0],
                        [-1, 0, 0, 1]]) / 6.0
    M3_hand = (np.ones((4, 4)) + np.eye(4)) / 120.0
    M3 = fem.assemble_mass_p1(ref3).toarray()
    local = max(np.abs(K - K_hand).max(), np.abs(M - M_hand).max(),
                np.abs(K3 - K3_hand).max(), np.abs(M3 - M3_hand).max())

    sq = meshmod.build_square(4)
    A = fem.assemble_stiffness(sq, dirichlet=True)
    qr = quadrature.rule(2, 19)
    x = quadrature.quadrature_points(sq, qr)
    b = fem.assemble_load(sq, np.sin(np.pi * x[..., 0]) * (1 + x[..., 1] ** 2), qr)
    b = b[sq.free_vertices]
    n = A.shape[0]
    x_sparse = fem.solve_sparse(A, b)
    x_dense = np.linalg.solve(A.toarray(), b)
    glob = np.abs(x_sparse - x_dense).max() / np.abs(x_dense).max()
    ok = local <= 1e-14 and glob <= 1e-10 and n <= 500
    return CheckResult(2, "assembly and solve oracles", ok,
                       f"local {local:.1e}, global {glob:.1e} on {n} unknowns")


def criterion_3():
    problem = ocp.ControlProblem(1.0, -1.0, 1.0, nonlinearity=ocp.arctan())
    m = meshmod.build_lshape(2)
    sol = ocp.active_set_solve(problem, m)
    e = estimate(m, sol, problem)["total"].total()
    zero = max(np.abs(sol.y.values).max(), np.abs(sol.p.values).max(),
               np.abs(sol.u.values).max())
    ok = sol.active_set_iters == 1 and zero == 0.0 and e <= 1e-12
    return CheckResult(3, "trivial fixed point", ok,
                       f"{sol.active_set_iters} active-set iteration(s), "
                       f"max |field| {zero:.1e}, E {e:.1e}")


def criterion_4():
    recs = records_for("ex1_adaptive")
    slopes = [_slope(recs, n, 12) for n in ("err_y_h1", "err_p_h1", "err_u_l2")]
    ok = len(recs) == 24 and all(abs(s + 0.5) <= TOL_RATE_2D for s in slopes)
    return CheckResult(4, "adaptive optimal rates (nu=1e-3)", ok,
                       "slopes y {:.3f}, p {:.3f}, u {:.3f}".format(*slopes))


def criterion_5():
    uni = records_for("ex1_uniform")
    # second half of the sweeps, as for the adaptive windows
    s_uni = _slope(uni, "err_y_h1", len(uni) - len(uni) // 2)
    s_ada = _slope(records_for("ex1_adaptive"), "err_y_h1", 12)
    ok = (len(uni) == 7 and abs(s_uni + 1.0 / 3.0) <= TOL_RATE_UNIFORM
          and s_uni > s_ada)
    return CheckResult(5, "uniform refinement rate", ok,
                       f"uniform {s_uni:.3f}, adaptive {s_ada:.3f}")


def criterion_6():
    ok, parts = True, []
    for key in ("ex1_nu4", "ex1_nu5"):
        eff = np.array([r.effectivity for r in records_for(key)[-10:]])
        good = eff.min() >= 0.2 and eff.max() <= 5.0 and eff.max() / eff.min() <= 3.0
        ok &= bool(good)
        parts.append(f"{key}: [{eff.min():.3f}, {eff.max():.3f}]")
    return CheckResult(6, "effectivity band", ok, "; ".join(parts))


def criterion_7():
    s_ours = _slope(records_for("ex1_nu4"), "err_u_l2", 12)
    s_comp = _slope(records_for("ex1_nu4_competitor"), "err_u_l2", 12)
    return CheckResult(7, "competitor contrast", s_comp >= s_ours + 0.1,
                       f"control slopes ours {s_ours:.3f}, competitor {s_comp:.3f}")


def criterion_8():
    ok, parts = True, []
    for tag in ("a1", "a2", "a3"):
        recs = records_for(f"ex2_{tag}")
        s = _slope(recs, "est_total", 6)
        ok &= len(recs) == 12 and abs(s + 1.0 / 3.0) <= TOL_RATE_3D
        parts.append(f"{tag} {s:.3f}")
    return CheckResult(8, "3D estimator rate", bool(ok), ", ".join(parts))


def criterion_9():
    recs = records_for("ex1_adaptive")
    rel = np.array([r.err_total / r.est_total for r in recs])
    eff = np.array([r.est_total / (r.err_total + r.osc) for r in recs])
    worst = 1.0
    for series in (rel, eff):
        q = series / series[4]
        worst = max(worst, q.max(), 1.0 / q.min())
    return CheckResult(9, "reliability and efficiency bands", worst <= 2.0,
                       f"max deviation from iteration-5 value x{worst:.3f}")


def invariant_checks():
    """Fast structural invariants; returns a list of failure messages."""
    failures = []
    rng = np.random.default_rng(0)
    # conformity under repeated adaptive refinement
    for m in (meshmod.build_lshape(0), meshmod.build_cube(1)):
        for _ in range(6):
            marked = rng.choice(m.num_elements, size=max(1, m.num_elements // 5),
                                replace=False)
            new = meshmod.refine(m, set(marked.tolist()))
            if not new.conformity_check():
                failures.append("non-conforming refinement")
            children = np.bincount(new.parent, minlength=m.num_elements)
            if np.any(children[marked] < 2):
                failures.append("marked element not bisected")
            m = new
    # box feasibility and fixed-point consistency of KKT solutions
    for nu, nl in ((1e-2, ocp.arctan()), (1e-3, ocp.linear(1.0))):
        problem = ocp.ControlProblem(
            nu, -2.0, 0.5, nonlinearity=nl,
            y_omega=lambda x: 5.0 * np.sin(np.pi * x[..., 0]) * np.sin(np.pi * x[..., 1]),
            source=lambda x: np.ones(x.shape[:-1]))
        m = meshmod.build_square(3)
        sol = ocp.active_set_solve(problem, m)
        u = sol.u.values
        if u.min() < problem.lower or u.max() > problem.upper:
            failures.append("control violates the box")
        w = -sol.p.values[m.elements].mean(axis=1) / nu
        if np.abs(ocp.project_box(w, problem.lower, problem.upper) - u).max() > 1e-8:
            failures.append("control is not the projected adjoint")
        r = ocp.kkt_residual(problem, m, (sol.y, sol.p, sol.u),
                             (sol.active_lower, sol.active_upper))
        if r.max_norm() > 1e-8:
            failures.append(f"KKT residual {r.max_norm():.1e}")
    # mark_max scaling invariance
    m = meshmod.build_lshape(1)
    vals = rng.random(m.num_elements)
    base = mark_max(IndicatorField(m, vals, "ocp"))
    for c in (1e-8, 3.0, 1e6):
        if mark_max(IndicatorField(m, c * vals, "ocp")) != base:
            failures.append("mark_max not scale invariant")
    # nonlinearity derivatives against central differences
    y = np.linspace(-0.9, 0.9, 37)
    x = np.zeros(y.shape + (2,))
    h = 1e-6
    for name in ("arctan", "a1", "a2", "a3"):
        nl = ocp.get_nonlinearity(name)
        for f, df in ((nl.a, nl.da_dy), (nl.da_dy, nl.d2a_dy2)):
            fd = (f(x, y + h) - f(x, y - h)) / (2 * h)
            ex = df(x, y)
            if np.abs(fd - ex).max() > 1e-5 * max(1.0, np.abs(ex).max()):
                failures.append(f"derivative mismatch for {name}")
    return failures


def criterion_10():
    t0 = time.perf_counter()
    failures = invariant_checks()
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    detail = f"{elapsed:.1f}s" + ("; " + "; ".join(failures) if failures else "")
    return CheckResult(10, "invariant suites", ok, detail)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
            9: criterion_9, 10: criterion_10}
SLOW = {8}
NEEDS = {4: ["ex1_adaptive"], 5: ["ex1_uniform", "ex1_adaptive"],
         6: ["ex1_nu4", "ex1_nu5"], 7: ["ex1_nu4", "ex1_nu4_competitor"],
         8: ["ex2_a1", "ex2_a2", "ex2_a3"], 9: ["ex1_adaptive"]}


def run_all(slow=False, only=None, jobs=1):
    numbers = sorted(only) if only else [n for n in CRITERIA if slow or n not in SLOW]
    keys = []
    for n in numbers:
        keys += [k for k in NEEDS.get(n, []) if k not in keys]
    prefetch(keys, jobs)
    return [CRITERIA[n]() for n in numbers]
