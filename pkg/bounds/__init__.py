"""
Bounds package
--------------
Lower bounds on the least mass eigenvalue, their validity window, alpha
sweeps, and Weyl admissibility of mass perturbations.
"""

from bounds.bounds import (
    AdmissibilityVerdict,
    BoundEvaluation,
    WindowCheck,
    admissible_perturbation,
    alpha_admissible,
    certified_bound,
    f_alpha,
    f_alpha_curve,
    f_alpha_general,
    shift_invert_spectrum,
    validity_window,
    weyl_bounds,
    window_edge,
)
from bounds.sweep import SweepResult, alpha_grid, blind_grid, oracle_grid, sweep

__all__ = [
    "AdmissibilityVerdict",
    "BoundEvaluation",
    "SweepResult",
    "WindowCheck",
    "admissible_perturbation",
    "alpha_admissible",
    "alpha_grid",
    "blind_grid",
    "certified_bound",
    "f_alpha",
    "f_alpha_curve",
    "f_alpha_general",
    "oracle_grid",
    "shift_invert_spectrum",
    "sweep",
    "validity_window",
    "weyl_bounds",
    "window_edge",
]
