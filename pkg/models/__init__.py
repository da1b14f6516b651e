"""
Mass-stiffness model package.

This package provides the (M, K) pencil and modal-data types, the chain
builder with the two reference systems, the modal solver, and the JSON
schemas used to move systems and modal data between CLI commands.
"""

from models.base import (
    MassStiffnessSystem,
    ModalData,
    Perturbation,
    RealizabilityCertificate,
    SystemRegistry,
)
from models.chain import REFERENCE_MASSES, REFERENCE_SPRINGS, build_chain
from models.modal import (
    PerturbedSystem,
    apply_perturbation,
    canonicalize_left,
    kinetic_energy,
    left_eigenvectors,
    modal_from_measurements,
    realizability_certificate,
    solve_pencil,
)
from utils.logging_utils import get_logger

logger = get_logger("models")

__all__ = [
    "MassStiffnessSystem",
    "ModalData",
    "Perturbation",
    "PerturbedSystem",
    "REFERENCE_MASSES",
    "REFERENCE_SPRINGS",
    "RealizabilityCertificate",
    "SystemRegistry",
    "apply_perturbation",
    "build_chain",
    "canonicalize_left",
    "create_system",
    "kinetic_energy",
    "left_eigenvectors",
    "modal_from_measurements",
    "realizability_certificate",
    "solve_pencil",
]


def create_system(name: str) -> MassStiffnessSystem:
    """
    Create a registered system by name.

    Args:
        name: Registered system name (e.g. "M1", "M2")

    Returns:
        The assembled system

    Raises:
        UnknownSystem: If the name is not registered
    """
    system = SystemRegistry.get_system(name)
    logger.debug(f"Created system {name} (n={system.n})")
    return system
