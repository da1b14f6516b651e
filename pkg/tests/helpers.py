"""Random matrix builders shared by the randomized suites."""

import numpy as np

from models import MassStiffnessSystem
from spectral import SymmetricMatrix


def random_symmetric(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(scale=scale, size=(n, n))
    return 0.5 * (a + a.T)


def random_spd(rng: np.random.Generator, n: int) -> np.ndarray:
    """R R^T + n I, comfortably positive definite."""
    r = rng.normal(size=(n, n))
    return r @ r.T + n * np.eye(n)


def random_pencil(rng: np.random.Generator, n: int) -> MassStiffnessSystem:
    return MassStiffnessSystem(
        mass=SymmetricMatrix(random_spd(rng, n)),
        stiffness=SymmetricMatrix(100.0 * random_spd(rng, n)),
    )


def with_spectrum(rng: np.random.Generator, eigenvalues) -> tuple:
    """Q diag(w) Q^T for a random orthogonal Q; returns (matrix, Q)."""
    w = np.asarray(eigenvalues, dtype=np.float64)
    q, _ = np.linalg.qr(rng.normal(size=(w.size, w.size)))
    return (q * w) @ q.T, q
