"""
Estimation package
------------------
Surrogate mass matrices from eigenvector pairs and the recommended alpha.
"""

from estimation.estimate import (
    MassEstimate,
    Sigma1Check,
    estimate_mass,
    estimate_sequence,
    recommend_alpha,
    refine_with_pairs,
    sigma1_check,
    sigma1_check_stacked,
)

__all__ = [
    "MassEstimate",
    "Sigma1Check",
    "estimate_mass",
    "estimate_sequence",
    "recommend_alpha",
    "refine_with_pairs",
    "sigma1_check",
    "sigma1_check_stacked",
]
