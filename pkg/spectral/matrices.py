"""
Value types for dense real symmetric linear algebra.

``SymmetricMatrix`` is the carrier for mass, stiffness and perturbation
matrices. It is built from one triangle, so symmetry is exact by
construction, and its storage is read-only.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from utils.exceptions import AsymmetricMatrix, DimensionMismatch

ArrayLike = Union[np.ndarray, Sequence[Sequence[float]]]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Dense real symmetric n x n matrix."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionMismatch(f"expected a non-empty square matrix, got shape {a.shape}",
                                    {"shape": list(a.shape)})
        if not np.all(np.isfinite(a)):
            raise DimensionMismatch("matrix entries must be finite")
        upper = np.triu(a)
        object.__setattr__(self, "entries", _frozen(upper + np.triu(a, 1).T))

    @classmethod
    def from_rows(cls, rows: ArrayLike, atol: float = 1e-12) -> "SymmetricMatrix":
        """
        Build from a full matrix, rejecting input that is not symmetric.

        Args:
            rows: Square matrix, row by row
            atol: Allowed |a_ij - a_ji|, relative to max(1, max|a_ij|)

        Raises:
            AsymmetricMatrix: If the input is not symmetric within ``atol``
        """
        a = np.asarray(rows, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}",
                                    {"shape": list(a.shape)})
        scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
        asymmetry = float(np.max(np.abs(a - a.T))) if a.size else 0.0
        if asymmetry > atol * scale:
            raise AsymmetricMatrix(f"matrix is not symmetric (max |a_ij - a_ji| = {asymmetry:.3e})",
                                   {"asymmetry": asymmetry})
        return cls(a)

    @classmethod
    def identity(cls, n: int) -> "SymmetricMatrix":
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, n: int) -> "SymmetricMatrix":
        return cls(np.zeros((n, n)))

    @classmethod
    def diagonal(cls, values: Iterable[float]) -> "SymmetricMatrix":
        return cls(np.diag(np.asarray(list(values), dtype=np.float64)))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self.entries

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def to_rows(self) -> list:
        return self.entries.tolist()

    def __add__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"cannot add {self.n}x{self.n} and {other.n}x{other.n} matrices")
        return SymmetricMatrix(self.entries + other.entries)

    def __sub__(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"cannot subtract {other.n}x{other.n} from {self.n}x{self.n}")
        return SymmetricMatrix(self.entries - other.entries)

    def __matmul__(self, other) -> np.ndarray:
        other = other.entries if isinstance(other, SymmetricMatrix) else np.asarray(other, dtype=np.float64)
        if other.shape[0] != self.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by shape {other.shape}")
        return self.entries @ other

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        object.__setattr__(self, "vectors", _frozen(self.vectors))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def reconstruct(self) -> np.ndarray:
        """Sum of values[i] * vectors[i] vectors[i]^T."""
        return (self.vectors * self.values) @ self.vectors.T


@dataclass(frozen=True, eq=False)
class LowerTriangularFactor:
    """Cholesky factor L with L L^T = A."""

    lower: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "lower", _frozen(self.lower))

    @property
    def n(self) -> int:
        return self.lower.shape[0]

    def product(self) -> np.ndarray:
        return self.lower @ self.lower.T
