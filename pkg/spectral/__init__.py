"""
Spectral kernels package.

Dense symmetric eigendecomposition, Cholesky factorization, singular
values, pseudo-inverse and norms, plus the matrix value types they act on.
"""

from spectral.matrices import LowerTriangularFactor, SpectrumResult, SymmetricMatrix
from spectral.kernels import (
    cholesky,
    inverse_shifted,
    operator_norm,
    pseudo_inverse,
    sign_normalize,
    singular_values,
    solve_spd,
    spectral_radius,
    sym_eigen,
)

__all__ = [
    "LowerTriangularFactor",
    "SpectrumResult",
    "SymmetricMatrix",
    "cholesky",
    "inverse_shifted",
    "operator_norm",
    "pseudo_inverse",
    "sign_normalize",
    "singular_values",
    "solve_spd",
    "spectral_radius",
    "sym_eigen",
]
