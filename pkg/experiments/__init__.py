"""
Experiments package
-------------------
Deterministic reproduction of the reference-chain results and SVG figures.
"""

from experiments.plots import render_sweep_svg
from experiments.reproduce import (
    analyze_system,
    compare_stiffness_variants,
    compare_with_published,
    run_reproduction,
    system_curve,
)

__all__ = [
    "analyze_system",
    "compare_stiffness_variants",
    "compare_with_published",
    "render_sweep_svg",
    "run_reproduction",
    "system_curve",
]
