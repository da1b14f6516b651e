"""
Surrogate mass reconstruction from left/right eigenvector pairs.

With k pairs stacked as G and V, M' = G V^+ = M V V^+ = M P_V, where P_V is
the orthogonal projector onto span(V). Its largest singular value is the
norm of M restricted to span(V), which never exceeds sigma_1(M) and grows
as pairs are added; half of it is the recommended alpha.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from spectral import SymmetricMatrix, pseudo_inverse, sign_normalize, singular_values
from utils.exceptions import DimensionMismatch, DuplicatePair, PreconditionViolated, ZeroVector
from utils.logging_utils import get_logger

logger = get_logger("estimation")

DUPLICATE_TOLERANCE = 1e-10
PRECONDITION_TOLERANCE = 1e-8
SIGMA1_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class MassEstimate:
    """M' = G V^+ from k pairs, with rho = sigma_1(M') and alpha = rho / 2."""

    k: int
    m_prime: np.ndarray
    rho: float
    recommended_alpha: float
    left: np.ndarray
    right: np.ndarray


@dataclass(frozen=True)
class Sigma1Check:
    lhs: float
    rhs: float
    holds: bool


def _block(array: np.ndarray) -> np.ndarray:
    array = np.asarray(array, dtype=np.float64)
    if array.ndim == 1:
        array = array[:, None]
    if array.ndim != 2:
        raise DimensionMismatch(f"expected an n x k block, got shape {array.shape}")
    return array


def estimate_mass(left: np.ndarray, right: np.ndarray) -> MassEstimate:
    """
    Reconstruct M' = G V^+ from k eigenvector pairs.

    Args:
        left: n x k block G (or a single n-vector)
        right: n x k block V (or a single n-vector)

    Returns:
        The estimate with rho = sigma_1(M') and recommended alpha rho / 2

    Raises:
        DimensionMismatch: If the blocks differ in shape or k is not in 1..n
    """
    left, right = _block(left), _block(right)
    if left.shape != right.shape:
        raise DimensionMismatch(f"left block {left.shape} and right block {right.shape} differ")
    n, k = right.shape
    if not 1 <= k <= n:
        raise DimensionMismatch(f"need 1 <= k <= n pairs, got k={k} for n={n}")

    m_prime = left @ pseudo_inverse(right)
    rho = float(singular_values(m_prime)[0])
    logger.debug(f"estimate_mass: k={k} rho={rho:.17g}")
    return MassEstimate(k=k, m_prime=m_prime, rho=rho, recommended_alpha=rho / 2.0,
                        left=left.copy(), right=right.copy())


def recommend_alpha(estimate: MassEstimate) -> float:
    return estimate.recommended_alpha


def estimate_sequence(left: np.ndarray, right: np.ndarray) -> List[MassEstimate]:
    """Estimates from the first 1, 2, ..., k pairs."""
    left, right = _block(left), _block(right)
    return [estimate_mass(left[:, :j], right[:, :j]) for j in range(1, right.shape[1] + 1)]


def _mass_times(g: np.ndarray, v: np.ndarray, mass: SymmetricMatrix) -> None:
    expected = mass @ v
    scale = max(1.0, float(np.linalg.norm(expected)))
    if float(np.linalg.norm(g - expected)) > PRECONDITION_TOLERANCE * scale:
        raise PreconditionViolated("left vectors are not M times the right vectors",
                                   {"residual": float(np.linalg.norm(g - expected))})


def sigma1_check(g: np.ndarray, v: np.ndarray, mass: SymmetricMatrix) -> Sigma1Check:
    """
    Compare sigma_1(g v^+) with sigma_1(M) for g = M v.

    Raises:
        ZeroVector: If v is zero
        PreconditionViolated: If g differs from M v beyond 1e-8 (relative)
    """
    g = np.asarray(g, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if g.shape != v.shape or v.shape != (mass.n,):
        raise DimensionMismatch(f"g {g.shape} and v {v.shape} must be {mass.n}-vectors")
    if float(np.linalg.norm(v)) == 0.0:
        raise ZeroVector("v must be nonzero")
    _mass_times(g, v, mass)

    lhs = float(singular_values(np.outer(g, pseudo_inverse(v)))[0])
    rhs = float(singular_values(mass.array)[0])
    return Sigma1Check(lhs=lhs, rhs=rhs, holds=lhs <= rhs + SIGMA1_SLACK)


def sigma1_check_stacked(left: np.ndarray, right: np.ndarray, mass: SymmetricMatrix) -> Sigma1Check:
    """
    Stacked-pair variant: sigma_1(G V^+) against sigma_1(M).

    Never raises on a violated inequality; ``holds`` reports it.
    """
    left, right = _block(left), _block(right)
    if right.shape[0] != mass.n:
        raise DimensionMismatch(f"blocks have {right.shape[0]} rows, mass is {mass.n}x{mass.n}")
    _mass_times(left, right, mass)
    lhs = estimate_mass(left, right).rho
    rhs = float(singular_values(mass.array)[0])
    check = Sigma1Check(lhs=lhs, rhs=rhs, holds=lhs <= rhs + SIGMA1_SLACK)
    if not check.holds:
        logger.warning(f"sigma_1(G V^+) = {lhs:.17g} exceeds sigma_1(M) = {rhs:.17g} for k={right.shape[1]}")
    return check


def refine_with_pairs(
    existing: MassEstimate,
    new_left: np.ndarray,
    new_right: np.ndarray,
    tolerance: float = DUPLICATE_TOLERANCE,
) -> MassEstimate:
    """
    Add one canonically scaled pair (<g, v> = 1) and re-estimate.

    Raises:
        PreconditionViolated: If <g, v> differs from 1 beyond 1e-8
        DuplicatePair: If v matches an existing column after sign normalization
        DimensionMismatch: If the estimate already holds n pairs
    """
    new_left = np.asarray(new_left, dtype=np.float64)
    new_right = np.asarray(new_right, dtype=np.float64)
    n = existing.right.shape[0]
    if new_left.shape != (n,) or new_right.shape != (n,):
        raise DimensionMismatch(f"new pair must be two {n}-vectors")
    inner = float(new_left @ new_right)
    if abs(inner - 1.0) > PRECONDITION_TOLERANCE:
        raise PreconditionViolated(f"new pair is not canonically scaled (<g, v> = {inner:.17g})",
                                   {"inner_product": inner})

    candidate = sign_normalize(new_right)
    for j, column in enumerate(sign_normalize(existing.right).T):
        if float(np.max(np.abs(column - candidate))) <= tolerance:
            raise DuplicatePair(f"pair duplicates existing column {j}", {"column": j})
    if existing.k >= n:
        raise DimensionMismatch(f"estimate already uses all {n} pairs")

    refined = estimate_mass(np.column_stack([existing.left, new_left]),
                            np.column_stack([existing.right, new_right]))
    logger.info(f"Refined mass estimate k={existing.k}->{refined.k}: "
                f"alpha {existing.recommended_alpha:.6g} -> {refined.recommended_alpha:.6g}")
    return refined
