"""
Modal analysis of (M, K) pencils.

Solves K v = lambda M v by Cholesky reduction to a standard symmetric
problem, forms canonical left eigenvectors g = M v, and certifies physical
realizability (positive kinetic energy) through the least mass eigenvalue.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from models.base import MassStiffnessSystem, ModalData, Perturbation, RealizabilityCertificate
from spectral import SymmetricMatrix, cholesky, sign_normalize, sym_eigen
from utils.exceptions import DegenerateScaling, DimensionMismatch, NotPositiveDefinite
from utils.logging_utils import get_logger

logger = get_logger("modal")

DEGENERATE_SCALING_TOLERANCE = 1e-14


@dataclass(frozen=True, eq=False)
class PerturbedSystem:
    """Result of applying a perturbation: the new pencil, its modes, and its certificate."""

    system: MassStiffnessSystem
    modal: ModalData
    certificate: RealizabilityCertificate


def solve_pencil(system: MassStiffnessSystem) -> ModalData:
    """
    Full modal solve of the pencil.

    With M = L L^T the problem becomes L^-1 K L^-T y = lambda y; each
    v = L^-T y is rescaled to v^T M v = 1 and sign-normalized.

    Args:
        system: Pencil with SPD mass

    Returns:
        Modal data with k = n, ascending eigenvalues (rad^2/s^2) and G = M V

    Raises:
        NotPositiveDefinite: If the mass factorization fails
    """
    lower = cholesky(system.mass).lower
    half = solve_triangular(lower, system.stiffness.array, lower=True)
    reduced = solve_triangular(lower, half.T, lower=True).T
    spectrum = sym_eigen(SymmetricMatrix(0.5 * (reduced + reduced.T)))

    right = solve_triangular(lower.T, spectrum.vectors, lower=False)
    norms = np.sqrt(np.einsum("ij,ij->j", right, system.mass @ right))
    right = sign_normalize(right / norms)

    logger.debug(f"solve_pencil: n={system.n} eigenvalues={spectrum.values.tolist()}")
    return ModalData(spectrum.values, right, left_eigenvectors(system.mass, right))


def left_eigenvectors(mass: SymmetricMatrix, right: np.ndarray) -> np.ndarray:
    """
    Canonical left eigenvectors G = M V.

    Raises:
        DimensionMismatch: If ``right`` does not have n rows
    """
    right = np.asarray(right, dtype=np.float64)
    if right.shape[0] != mass.n:
        raise DimensionMismatch(f"right vectors have {right.shape[0]} rows, mass is {mass.n}x{mass.n}")
    return mass @ right


def canonicalize_left(
    raw_left: np.ndarray,
    right: np.ndarray,
    tolerance: float = DEGENERATE_SCALING_TOLERANCE,
) -> np.ndarray:
    """
    Rescale a measured left eigenvector so that <g, v> = 1.

    Under mass normalization this reproduces g = M v whatever the scale of
    the measurement.

    Raises:
        DegenerateScaling: If |<raw, v>| < tolerance * ||raw|| * ||v||
    """
    raw_left = np.asarray(raw_left, dtype=np.float64)
    right = np.asarray(right, dtype=np.float64)
    if raw_left.shape != right.shape or raw_left.ndim != 1:
        raise DimensionMismatch(f"left {raw_left.shape} and right {right.shape} must be equal-length vectors")
    inner = float(raw_left @ right)
    bound = tolerance * float(np.linalg.norm(raw_left)) * float(np.linalg.norm(right))
    if inner == 0.0 or abs(inner) < bound:
        raise DegenerateScaling("left eigenvector is orthogonal to its right eigenvector",
                                {"inner_product": inner})
    return raw_left / inner


def modal_from_measurements(eigenvalues, right: np.ndarray, raw_left: np.ndarray) -> ModalData:
    """Build modal data from measured pairs, canonicalizing every left column."""
    right = np.atleast_2d(np.asarray(right, dtype=np.float64).T).T
    raw_left = np.atleast_2d(np.asarray(raw_left, dtype=np.float64).T).T
    if right.shape != raw_left.shape:
        raise DimensionMismatch(f"right {right.shape} and left {raw_left.shape} blocks differ")
    left = np.column_stack([canonicalize_left(raw_left[:, j], right[:, j]) for j in range(right.shape[1])])
    return ModalData(eigenvalues, right, left)


def kinetic_energy(mass: SymmetricMatrix, velocity: np.ndarray) -> float:
    """1/2 <x', M x'> in joules."""
    velocity = np.asarray(velocity, dtype=np.float64)
    if velocity.shape != (mass.n,):
        raise DimensionMismatch(f"velocity has shape {velocity.shape}, expected ({mass.n},)")
    return 0.5 * float(velocity @ (mass @ velocity))


def realizability_certificate(mass: SymmetricMatrix) -> RealizabilityCertificate:
    """Realizable iff the least eigenvalue of the mass matrix is strictly positive."""
    least = float(sym_eigen(mass).values[0])
    return RealizabilityCertificate(realizable=least > 0.0, least_eigenvalue=least)


def apply_perturbation(system: MassStiffnessSystem, perturbation: Perturbation) -> PerturbedSystem:
    """
    Forward solve of the modified pencil (M + dM, K + dK).

    Raises:
        DimensionMismatch: If the perturbation size differs from the system
        NotPositiveDefinite: If M + dM is no longer positive definite
    """
    if perturbation.n != system.n:
        raise DimensionMismatch(f"perturbation is {perturbation.n}x{perturbation.n}, system is {system.n}x{system.n}")
    mass = system.mass + perturbation.delta_mass
    stiffness = system.stiffness + perturbation.delta_stiffness
    certificate = realizability_certificate(mass)

    try:
        modified = MassStiffnessSystem(mass=mass, stiffness=stiffness)
    except NotPositiveDefinite as e:
        e.details["least_eigenvalue"] = certificate.least_eigenvalue
        logger.warning(f"Perturbed mass is not positive definite (least eigenvalue {certificate.least_eigenvalue:g})")
        raise
    return PerturbedSystem(system=modified, modal=solve_pencil(modified), certificate=certificate)
