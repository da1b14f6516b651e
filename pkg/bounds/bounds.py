"""
Lower bounds on the least mass eigenvalue from one eigenvector pair.

For the pair (g~, v~) = (M v1, v1) of the lowest mode and any shift alpha
closer to w1 than to every other mass eigenvalue,

    w1 >= alpha - ||x|| ||g~ - alpha v~|| / <x, v~>      for <x, v~> > 0,

and choosing x parallel to v~ gives the sharpest form

    F(alpha) = alpha - ||g~ - alpha v~|| / ||v~||.

Weyl's inequality then turns a certified lower bound L <= w1(M) into an
admissibility test for a mass perturbation dM: lambda_1(dM) > -L keeps
M + dM positive definite.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from spectral import SymmetricMatrix, sym_eigen
from utils.exceptions import DataError, DimensionMismatch, NonPositiveInnerProduct, SingularShift, ZeroVector
from utils.logging_utils import get_logger

logger = get_logger("bounds")

SINGULAR_SHIFT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BoundEvaluation:
    """
    One sample of F(alpha).

    ``valid`` is None when no spectrum is available to check the window
    (reported as "unknown"); ``window_margin`` is |w2 - alpha| - |w1 - alpha|
    when it is.
    """

    alpha: float
    value: float
    valid: Optional[bool] = None
    window_margin: Optional[float] = None

    @property
    def validity_label(self) -> str:
        if self.valid is None:
            return "unknown"
        return "true" if self.valid else "false"


@dataclass(frozen=True)
class WindowCheck:
    valid: bool
    margin: float


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """``admissible`` is a certificate; False means "not certified", not "impossible"."""

    admissible: bool
    margin: float


def _vectors(*vectors: np.ndarray) -> List[np.ndarray]:
    arrays = [np.asarray(v, dtype=np.float64) for v in vectors]
    shape = arrays[0].shape
    if len(shape) != 1 or any(a.shape != shape for a in arrays):
        raise DimensionMismatch(f"expected equal-length vectors, got {[a.shape for a in arrays]}")
    return arrays


def f_alpha_general(x: np.ndarray, g1: np.ndarray, v1: np.ndarray, alpha: float) -> float:
    """
    alpha - ||x|| ||g1 - alpha v1|| / <x, v1>.

    Raises:
        ZeroVector: If x is zero
        NonPositiveInnerProduct: If <x, v1> <= 0
    """
    x, g1, v1 = _vectors(x, g1, v1)
    x_norm = float(np.linalg.norm(x))
    if x_norm == 0.0:
        raise ZeroVector("x must be nonzero")
    inner = float(x @ v1)
    if inner <= 0.0:
        raise NonPositiveInnerProduct(f"<x, v1> = {inner:g} must be positive", {"inner_product": inner})
    return alpha - x_norm * float(np.linalg.norm(g1 - alpha * v1)) / inner


def f_alpha(g1: np.ndarray, v1: np.ndarray, alpha: float) -> float:
    """
    alpha - ||g1 - alpha v1|| / ||v1||.

    Raises:
        ZeroVector: If v1 is zero
    """
    g1, v1 = _vectors(g1, v1)
    v_norm = float(np.linalg.norm(v1))
    if v_norm == 0.0:
        raise ZeroVector("v1 must be nonzero")
    return alpha - float(np.linalg.norm(g1 - alpha * v1)) / v_norm


def f_alpha_curve(g1: np.ndarray, v1: np.ndarray, alphas: Sequence[float]) -> np.ndarray:
    """Vectorized F(alpha) over a grid."""
    g1, v1 = _vectors(g1, v1)
    v_norm = float(np.linalg.norm(v1))
    if v_norm == 0.0:
        raise ZeroVector("v1 must be nonzero")
    alphas = np.asarray(alphas, dtype=np.float64)
    residuals = np.linalg.norm(g1[None, :] - alphas[:, None] * v1[None, :], axis=1)
    return alphas - residuals / v_norm


def alpha_admissible(g1: np.ndarray, v1: np.ndarray, alpha: float) -> bool:
    """alpha >= ||g1 - alpha v1|| / ||v1||, i.e. the bound certifies w1 >= 0 at alpha."""
    return f_alpha(g1, v1, alpha) >= 0.0


def validity_window(mass_spectrum: Sequence[float], alpha: float) -> WindowCheck:
    """
    Whether alpha is strictly closer to w1 than to every other eigenvalue.

    For an ascending spectrum this is alpha < (w1 + w2) / 2; the midpoint
    itself is invalid.
    """
    spectrum = np.sort(np.asarray(mass_spectrum, dtype=np.float64))
    if spectrum.size < 2:
        raise DataError("the validity window needs at least two eigenvalues")
    distances = np.abs(spectrum - alpha)
    margin = float(distances[1] - distances[0])
    valid = bool(np.all(distances[0] < distances[1:]))
    return WindowCheck(valid=valid, margin=margin)


def window_edge(mass_spectrum: Sequence[float]) -> float:
    """(w1 + w2) / 2, the first alpha outside the window."""
    spectrum = np.sort(np.asarray(mass_spectrum, dtype=np.float64))
    return 0.5 * float(spectrum[0] + spectrum[1])


def certified_bound(
    g1: np.ndarray,
    v1: np.ndarray,
    alpha: float,
    mass_spectrum: Optional[Sequence[float]] = None,
) -> BoundEvaluation:
    """F(alpha) annotated with its validity when a spectrum is known."""
    value = f_alpha(g1, v1, alpha)
    if mass_spectrum is None:
        return BoundEvaluation(alpha=float(alpha), value=value)
    window = validity_window(mass_spectrum, alpha)
    return BoundEvaluation(alpha=float(alpha), value=value, valid=window.valid, window_margin=window.margin)


def shift_invert_spectrum(mass_spectrum: Sequence[float], alpha: float) -> np.ndarray:
    """
    Eigenvalues 1 / (w_i - alpha) of (M - alpha I)^-1.

    Raises:
        SingularShift: If |alpha - w_i| < 1e-12 * max|w_i| for some i
    """
    spectrum = np.asarray(mass_spectrum, dtype=np.float64)
    gaps = spectrum - alpha
    scale = float(np.max(np.abs(spectrum))) if spectrum.size else 0.0
    closest = float(np.min(np.abs(gaps)))
    if closest == 0.0 or closest < SINGULAR_SHIFT_TOLERANCE * scale:
        raise SingularShift(f"alpha = {alpha:g} coincides with an eigenvalue", {"alpha": alpha})
    return 1.0 / gaps


def admissible_perturbation(lower_bound_w1: float, delta_mass: SymmetricMatrix) -> AdmissibilityVerdict:
    """
    Weyl certificate for a mass perturbation.

    lambda_1(M + dM) >= lambda_1(M) + lambda_1(dM) >= L + lambda_1(dM), so
    lambda_1(dM) > -L guarantees a positive definite M + dM for every M
    with w1(M) >= L.
    """
    least = float(sym_eigen(delta_mass).values[0])
    margin = least + float(lower_bound_w1)
    verdict = AdmissibilityVerdict(admissible=margin > 0.0, margin=margin)
    logger.debug(f"admissible_perturbation: L={lower_bound_w1:g} lambda_1(dM)={least:g} -> {verdict}")
    return verdict


def weyl_bounds(a: SymmetricMatrix, b: SymmetricMatrix) -> List[Tuple[float, float]]:
    """Interval [lambda_i(A) + lambda_1(B), lambda_i(A) + lambda_n(B)] for each lambda_i(A + B)."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compare {a.n}x{a.n} with {b.n}x{b.n}")
    base = sym_eigen(a).values
    shift = sym_eigen(b).values
    return [(float(w + shift[0]), float(w + shift[-1])) for w in base]
