"""Command line entry point: ``ocp-afem run`` and ``ocp-afem verify``."""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

from ocp_afem import bench
from ocp_afem.adapt import AdaptConfig, adaptive_loop, write_csv
from ocp_afem.fem import ConvergenceError, SolverError

EXIT_OK, EXIT_SOLVER, EXIT_ACCEPTANCE = 0, 2, 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ocp-afem",
        description="Adaptive FEM for control-constrained semilinear optimal control.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one experiment")
    run.add_argument("--example", type=int, choices=(1, 2), default=1)
    run.add_argument("--nu", type=float, default=1e-3)
    run.add_argument("--nonlinearity", choices=("arctan", "a1", "a2", "a3"),
                     default=None, help="default: arctan (example 1), a1 (example 2)")
    run.add_argument("--estimator", choices=("ours", "competitor"), default="ours")
    run.add_argument("--refinement", choices=("adaptive", "uniform"),
                     default="adaptive")
    run.add_argument("--max-iters", type=int, default=10)
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--cold-start", action="store_true",
                     help="solve every mesh from the zero initial guess")
    run.add_argument("--quad-assembly", type=int, default=None, metavar="DEG",
                     help="quadrature degree for nonlinear terms")
    run.add_argument("--seed", type=int, default=0,
                     help="accepted for reproducibility; the solver is deterministic")
    run.add_argument("--no-vtk", action="store_true", help="skip mesh_<iter>.vtk output")

    ver = sub.add_parser("verify", help="run the acceptance checks")
    ver.add_argument("--slow", action="store_true",
                     help="include the three-dimensional experiments")
    ver.add_argument("--only", type=int, nargs="*", default=None, metavar="N",
                     help="criterion numbers to run")
    ver.add_argument("--jobs", type=int, default=1,
                     help="number of worker processes for independent runs")
    return parser


def _problem_for(args):
    if args.example == 1:
        if args.nonlinearity not in (None, "arctan"):
            raise SystemExit("example 1 uses the arctan nonlinearity")
        case = bench.example1(args.nu)
        return case.problem, case
    tag = args.nonlinearity or "a1"
    if tag == "arctan":
        raise SystemExit("example 2 uses a1, a2 or a3")
    return bench.example2(tag, args.nu), None


def _summary(records, args):
    out = {"example": args.example, "nu": args.nu, "estimator": args.estimator,
           "refinement": args.refinement, "iterations": len(records),
           "final_ndof": records[-1].ndof,
           "final_estimator": records[-1].est_total,
           "final_effectivity": records[-1].effectivity, "slopes": {}}
    window = records[len(records) // 2:]
    if len(window) >= 3:
        for name in ("est_total", "err_y_h1", "err_p_h1", "err_u_l2", "err_total"):
            pts = [(r.ndof, getattr(r, name)) for r in window]
            if all(v > 0 and math.isfinite(v) for _, v in pts):
                out["slopes"][name] = bench.fit_rate(pts)
    # JSON has no NaN
    return {k: (None if isinstance(v, float) and not math.isfinite(v) else v)
            for k, v in out.items()}


def cmd_run(args):
    problem, case = _problem_for(args)
    os.makedirs(args.out, exist_ok=True)
    mesh = bench.initial_mesh(args.example)
    cfg = AdaptConfig(args.max_iters, args.estimator, args.refinement,
                      warm_start=not args.cold_start, exact=case,
                      quad_degree=args.quad_assembly,
                      vtk_dir=None if args.no_vtk else args.out)
    try:
        records, _ = adaptive_loop(problem, mesh, cfg)
    except (ConvergenceError, SolverError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    write_csv(records, os.path.join(args.out, "records.csv"))
    with open(os.path.join(args.out, "summary.json"), "w") as fh:
        json.dump(_summary(records, args), fh, indent=2)
    for r in records:
        print(f"{r.iteration:3d} ndof {r.ndof:8d}  E {r.est_total:.4e}  "
              f"err {r.err_total:.4e}  eff {r.effectivity:.3f}")
    return EXIT_OK


def cmd_verify(args):
    from ocp_afem.verify import run_all
    try:
        results = run_all(slow=args.slow, only=args.only, jobs=args.jobs)
    except (ConvergenceError, SolverError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    for res in results:
        print(res.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_ACCEPTANCE


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if args.command == "run":
        if args.max_iters < 1:
            raise SystemExit("--max-iters must be at least 1")
        return cmd_run(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
