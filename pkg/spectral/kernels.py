"""
Dense real symmetric linear-algebra kernels.

The symmetric eigensolver is a cyclic two-sided rotation (Jacobi) sweep,
which is accurate and deterministic for the small systems this package
targets. Factorizations and singular values come from SciPy's LAPACK
bindings.
"""

from typing import Optional, Union

import numpy as np
from scipy import linalg
from scipy.linalg import lapack

from spectral.matrices import LowerTriangularFactor, SpectrumResult, SymmetricMatrix
from utils.exceptions import ConvergenceError, DimensionMismatch, NotPositiveDefinite, NumericalError, SingularShift
from utils.logging_utils import get_logger

logger = get_logger("spectral")

DEFAULT_MAX_SWEEPS = 100
DEFAULT_EIGEN_TOLERANCE = 1e-12
DEFAULT_PINV_RTOL = 1e-12

MatrixLike = Union[SymmetricMatrix, np.ndarray]


def _entries(a: MatrixLike) -> np.ndarray:
    if isinstance(a, SymmetricMatrix):
        return a.entries
    return SymmetricMatrix(a).entries


def sign_normalize(vectors: np.ndarray) -> np.ndarray:
    """
    Flip columns so that each column's largest-magnitude entry is positive.

    Ties in magnitude resolve to the lowest row index.
    """
    vectors = np.array(vectors, dtype=np.float64, copy=True)
    if vectors.ndim == 1:
        return sign_normalize(vectors[:, None])[:, 0]
    for j in range(vectors.shape[1]):
        column = vectors[:, j]
        if column[int(np.argmax(np.abs(column)))] < 0:
            vectors[:, j] = -column
    return vectors


def _off_diagonal_norm(work: np.ndarray) -> float:
    return float(np.linalg.norm(work - np.diag(np.diag(work))))


def _rotate(work: np.ndarray, vectors: np.ndarray, p: int, q: int) -> None:
    apq = work[p, q]
    if apq == 0.0:
        return
    theta = (work[q, q] - work[p, p]) / (2.0 * apq)
    # smaller root of t^2 + 2 theta t - 1 = 0
    t = (1.0 if theta >= 0.0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    rotation = np.array([[c, s], [-s, c]])
    pair = [p, q]
    work[:, pair] = work[:, pair] @ rotation
    work[pair, :] = rotation.T @ work[pair, :]
    work[p, q] = work[q, p] = 0.0
    vectors[:, pair] = vectors[:, pair] @ rotation


def sym_eigen(
    a: MatrixLike,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    tolerance: float = DEFAULT_EIGEN_TOLERANCE,
) -> SpectrumResult:
    """
    Full eigendecomposition of a real symmetric matrix.

    Args:
        a: Symmetric matrix
        max_sweeps: Iteration cap on full cyclic sweeps
        tolerance: Convergence when the off-diagonal Frobenius norm drops
            below ``tolerance * ||a||_F``

    Returns:
        Ascending eigenvalues with sign-normalized orthonormal eigenvectors

    Raises:
        ConvergenceError: If the sweep cap is reached first
    """
    work = np.array(_entries(a), dtype=np.float64, copy=True)
    n = work.shape[0]
    vectors = np.eye(n)
    threshold = tolerance * float(np.linalg.norm(work))

    sweeps = 0
    off = _off_diagonal_norm(work)
    while not (off == 0.0 or off < threshold):
        if sweeps >= max_sweeps:
            raise ConvergenceError(off, sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vectors, p, q)
        sweeps += 1
        off = _off_diagonal_norm(work)

    values = np.diag(work).copy()
    order = np.argsort(values, kind="stable")
    logger.debug(f"sym_eigen: n={n} converged after {sweeps} sweeps (off={off:.3e})")
    return SpectrumResult(values[order], sign_normalize(vectors[:, order]), sweeps)


def cholesky(a: MatrixLike, pivot_tolerance: Optional[float] = None) -> LowerTriangularFactor:
    """
    Cholesky factor L (lower) with L L^T = a.

    Args:
        a: Symmetric matrix
        pivot_tolerance: Pivots (L_ii^2) at or below this value fail. Defaults
            to n * machine epsilon * max|a_ii|.

    Raises:
        NotPositiveDefinite: Carrying the zero-based index of the failing pivot
    """
    entries = _entries(a)
    n = entries.shape[0]
    factor, info = lapack.dpotrf(np.array(entries, copy=True), lower=1, clean=1)
    if info > 0:
        raise NotPositiveDefinite(int(info) - 1)
    if info < 0:
        raise NumericalError(f"dpotrf rejected argument {-info}", {"info": int(info)})

    lower = np.tril(factor)
    if pivot_tolerance is None:
        pivot_tolerance = n * np.finfo(np.float64).eps * float(np.max(np.abs(np.diag(entries))))
    weak = np.flatnonzero(np.diag(lower) ** 2 <= pivot_tolerance)
    if weak.size:
        raise NotPositiveDefinite(int(weak[0]), details={"pivot_tolerance": pivot_tolerance})
    return LowerTriangularFactor(lower)


def solve_spd(a: MatrixLike, b: np.ndarray) -> np.ndarray:
    """Solve a x = b for SPD ``a`` through its Cholesky factor."""
    factor = cholesky(a)
    b = np.asarray(b, dtype=np.float64)
    if b.shape[0] != factor.n:
        raise DimensionMismatch(f"right-hand side has {b.shape[0]} rows, expected {factor.n}")
    return linalg.cho_solve((factor.lower, True), b)


def singular_values(a: np.ndarray) -> np.ndarray:
    """Singular values of any real matrix, descending."""
    a = np.atleast_2d(np.asarray(a.entries if isinstance(a, SymmetricMatrix) else a, dtype=np.float64))
    return linalg.svdvals(a)


def operator_norm(a: np.ndarray) -> float:
    """Induced 2-norm (largest singular value)."""
    values = singular_values(a)
    return float(values[0]) if values.size else 0.0


def pseudo_inverse(v: np.ndarray, rtol: float = DEFAULT_PINV_RTOL) -> np.ndarray:
    """
    Moore-Penrose pseudo-inverse through a truncated SVD.

    A 1-D input is treated as a single column, so the result is a 1 x n row.
    Singular values below ``rtol * sigma_1`` are treated as zero.
    """
    v = np.asarray(v, dtype=np.float64)
    if v.ndim == 1:
        v = v[:, None]
    u, s, vt = linalg.svd(v, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((v.shape[1], v.shape[0]))
    keep = s >= rtol * s[0]
    s_inv = np.divide(1.0, s, out=np.zeros_like(s), where=keep)
    if not np.all(keep):
        logger.debug(f"pseudo_inverse: truncated {int(np.sum(~keep))} of {s.size} singular values")
    return (vt.T * s_inv) @ u.T


def spectral_radius(a: MatrixLike) -> float:
    """max |w_i| over the spectrum of a symmetric matrix."""
    return float(np.max(np.abs(sym_eigen(a).values)))


def inverse_shifted(a: MatrixLike, alpha: float) -> SymmetricMatrix:
    """(A - alpha I)^-1 for a shift away from the spectrum."""
    entries = _entries(a)
    shifted = entries - alpha * np.eye(entries.shape[0])
    try:
        inverse = linalg.solve(shifted, np.eye(entries.shape[0]), assume_a="sym")
    except linalg.LinAlgError as e:
        raise SingularShift(f"A - {alpha} I is singular", {"alpha": alpha, "original_error": str(e)})
    return SymmetricMatrix(inverse)
