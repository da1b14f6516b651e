"""
Spring-mass chain assembly and the two reference chains.

The stiffness pattern follows the five-mass example chain exactly as it is
usually printed: K[0][0] = k1, interior K[i][i] = k_i + k_(i+1),
K[i][i+1] = -k_(i+1) and a last diagonal entry of k_n. The "summed"
terminal variant puts k_(n-1) + k_n in the last diagonal instead.
"""

from typing import Literal, Sequence

import numpy as np

from models.base import MassStiffnessSystem, SystemRegistry
from spectral import SymmetricMatrix
from utils.exceptions import DataError, DimensionMismatch

Terminal = Literal["printed", "summed"]

REFERENCE_SPRINGS = tuple(1000.0 * i for i in range(1, 6))
REFERENCE_MASSES = {
    "M1": (15.0, 21.0, 24.0, 27.0, 30.0),
    "M2": (30.0, 170.0, 180.0, 190.0, 200.0),
}


def chain_stiffness(springs: Sequence[float], terminal: Terminal = "printed") -> np.ndarray:
    k = np.asarray(springs, dtype=np.float64)
    n = k.size
    stiffness = np.zeros((n, n))
    stiffness[0, 0] = k[0]
    for i in range(1, n - 1):
        stiffness[i, i] = k[i - 1] + k[i]
    for i in range(n - 1):
        stiffness[i, i + 1] = stiffness[i + 1, i] = -k[i]
    if terminal == "printed":
        stiffness[n - 1, n - 1] = k[n - 1]
    elif terminal == "summed":
        stiffness[n - 1, n - 1] = k[n - 2] + k[n - 1]
    else:
        raise DataError(f"unknown chain terminal '{terminal}'", {"allowed": ["printed", "summed"]})
    return stiffness


def build_chain(
    masses: Sequence[float],
    springs: Sequence[float],
    terminal: Terminal = "printed",
) -> MassStiffnessSystem:
    """
    Assemble a lumped-mass chain.

    Args:
        masses: Positive lumped masses (kg), one per node
        springs: Positive spring constants k_1..k_n (N/m)
        terminal: "printed" (last diagonal k_n) or "summed" (k_(n-1) + k_n)

    Returns:
        The (diag(masses), K) system

    Raises:
        DimensionMismatch: If the lists differ in length or n < 2
        DataError: If any mass or spring is not strictly positive
    """
    masses = [float(m) for m in masses]
    springs = [float(k) for k in springs]
    if len(masses) != len(springs):
        raise DimensionMismatch(f"{len(masses)} masses but {len(springs)} springs")
    if len(masses) < 2:
        raise DimensionMismatch("a chain needs at least two masses")
    if any(not m > 0 for m in masses):
        raise DataError("masses must be strictly positive", {"masses": masses})
    if any(not k > 0 for k in springs):
        raise DataError("springs must be strictly positive", {"springs": springs})

    return MassStiffnessSystem(
        mass=SymmetricMatrix.diagonal(masses),
        stiffness=SymmetricMatrix(chain_stiffness(springs, terminal)),
    )


def _reference(name: str):
    return lambda: build_chain(REFERENCE_MASSES[name], REFERENCE_SPRINGS)


for _name in REFERENCE_MASSES:
    SystemRegistry.register(_name, _reference(_name))
