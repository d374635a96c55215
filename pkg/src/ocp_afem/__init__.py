"""Adaptive finite elements for control-constrained semilinear optimal control."""

from ocp_afem.mesh import Mesh, MeshError, build_cube, build_lshape, build_square, refine
from ocp_afem.ocp import ControlProblem, KktSolution, active_set_solve
from ocp_afem.estimator import IndicatorField, estimate
from ocp_afem.adapt import AdaptConfig, AdaptRecord, adaptive_loop, mark_max

__all__ = [
    "Mesh", "MeshError", "build_cube", "build_lshape", "build_square", "refine",
    "ControlProblem", "KktSolution", "active_set_solve",
    "IndicatorField", "estimate",
    "AdaptConfig", "AdaptRecord", "adaptive_loop", "mark_max",
]
__version__ = "0.1.0"
