"""
Core domain types for mass-stiffness systems and their modal data.

This module defines the (M, K) pencil, truncated modal data with canonical
left eigenvectors, mass perturbations, and the registry through which named
systems are made available to the rest of the application.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from spectral import SymmetricMatrix, cholesky
from utils.exceptions import DataError, DimensionMismatch, UnknownSystem
from utils.logging_utils import get_logger

logger = get_logger("models")


@dataclass(frozen=True, eq=False)
class MassStiffnessSystem:
    """
    The pencil (M, K) of M x'' + K x = 0.

    The mass matrix must be symmetric positive definite; construction runs a
    Cholesky factorization and raises ``NotPositiveDefinite`` otherwise.
    """

    mass: SymmetricMatrix
    stiffness: SymmetricMatrix

    def __post_init__(self):
        if self.mass.n != self.stiffness.n:
            raise DimensionMismatch(
                f"mass is {self.mass.n}x{self.mass.n} but stiffness is {self.stiffness.n}x{self.stiffness.n}"
            )
        cholesky(self.mass)

    @property
    def n(self) -> int:
        return self.mass.n


@dataclass(frozen=True, eq=False)
class ModalData:
    """
    Ascending eigenvalues with right (V) and left (G) eigenvector columns.

    ``k`` is the number of retained pairs; eigenvalues has length k and both
    vector blocks are n x k. Under the canonical scaling G = M V and
    G^T V = I_k.
    """

    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray

    def __post_init__(self):
        eigenvalues = np.atleast_1d(np.asarray(self.eigenvalues, dtype=np.float64))
        right = np.asarray(self.right_vectors, dtype=np.float64)
        left = np.asarray(self.left_vectors, dtype=np.float64)
        if right.ndim == 1:
            right = right[:, None]
        if left.ndim == 1:
            left = left[:, None]
        if right.shape != left.shape:
            raise DimensionMismatch(f"right vectors {right.shape} and left vectors {left.shape} differ")
        n, k = right.shape
        if k < 1 or k > n or eigenvalues.shape != (k,):
            raise DimensionMismatch(
                f"need 1 <= k <= n eigenpairs, got {eigenvalues.shape[0]} eigenvalues for an {n}x{k} block"
            )
        for name, array in (("eigenvalues", eigenvalues), ("right_vectors", right), ("left_vectors", left)):
            if not np.all(np.isfinite(array)):
                raise DataError(f"{name} contain NaN or infinite entries")
        if np.any(np.diff(eigenvalues) < 0):
            raise DimensionMismatch("eigenvalues must be in ascending order",
                                    {"eigenvalues": eigenvalues.tolist()})
        for name, array in (("eigenvalues", eigenvalues), ("right_vectors", right), ("left_vectors", left)):
            array = np.array(array, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def n(self) -> int:
        return self.right_vectors.shape[0]

    @property
    def k(self) -> int:
        return self.right_vectors.shape[1]

    def truncate(self, k: int) -> "ModalData":
        """Keep the first ``k`` pairs."""
        if not 1 <= k <= self.k:
            raise DimensionMismatch(f"cannot truncate {self.k} pairs to k={k}")
        return ModalData(self.eigenvalues[:k], self.right_vectors[:, :k], self.left_vectors[:, :k])

    def pair(self, i: int = 0) -> Tuple[np.ndarray, np.ndarray]:
        """(g_i, v_i) for zero-based ``i``; pair(0) is (g~, v~)."""
        return self.left_vectors[:, i], self.right_vectors[:, i]

    def biorthogonality_error(self) -> float:
        """max |G^T V - I_k|, checkable without the mass matrix."""
        return float(np.max(np.abs(self.left_vectors.T @ self.right_vectors - np.eye(self.k))))

    def mass_normalization_error(self, mass: SymmetricMatrix) -> float:
        """max |V^T M V - I_k|."""
        gram = self.right_vectors.T @ (mass @ self.right_vectors)
        return float(np.max(np.abs(gram - np.eye(self.k))))


@dataclass(frozen=True, eq=False)
class Perturbation:
    """Mass change and optional stiffness change (zero by default)."""

    delta_mass: SymmetricMatrix
    delta_stiffness: Optional[SymmetricMatrix] = None

    def __post_init__(self):
        if self.delta_stiffness is None:
            object.__setattr__(self, "delta_stiffness", SymmetricMatrix.zeros(self.delta_mass.n))
        elif self.delta_stiffness.n != self.delta_mass.n:
            raise DimensionMismatch("delta_mass and delta_stiffness dimensions differ")

    @property
    def n(self) -> int:
        return self.delta_mass.n


@dataclass(frozen=True)
class RealizabilityCertificate:
    """Least mass eigenvalue and whether it is strictly positive."""

    realizable: bool
    least_eigenvalue: float


class SystemRegistry:
    """
    Registry for named mass-stiffness systems.

    Provides a central registry of system factories that the CLI and the
    reproduction suite can build by name.
    """

    _systems: Dict[str, Callable[[], MassStiffnessSystem]] = {}

    @classmethod
    def register(cls, name: str, factory: Callable[[], MassStiffnessSystem]):
        """
        Register a system factory.

        Args:
            name: Name to register the system under
            factory: Zero-argument callable returning the system
        """
        cls._systems[name] = factory

    @classmethod
    def get_system(cls, name: str) -> MassStiffnessSystem:
        """
        Build a registered system by name.

        Raises:
            UnknownSystem: If no system is registered under ``name``
        """
        factory = cls._systems.get(name)
        if factory is None:
            raise UnknownSystem(f"unknown system '{name}'", {"available": cls.list_systems()})
        logger.debug(f"Building registered system {name}")
        return factory()

    @classmethod
    def list_systems(cls) -> List[str]:
        """
        List all registered system names.

        Returns:
            List of system names
        """
        return sorted(cls._systems.keys())
