"""Alpha sweeps of the single-pair bound F(alpha)."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from bounds.bounds import BoundEvaluation, f_alpha_curve, validity_window
from utils.exceptions import DataError
from utils.logging_utils import get_logger

logger = get_logger("sweep")

# values within this relative distance of the current best count as ties
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class SweepResult:
    samples: List[BoundEvaluation] = field(default_factory=list)
    best: Optional[BoundEvaluation] = None

    @property
    def alphas(self) -> np.ndarray:
        return np.array([s.alpha for s in self.samples])

    @property
    def values(self) -> np.ndarray:
        return np.array([s.value for s in self.samples])


def alpha_grid(alpha_min: float, alpha_max: float, step: float) -> np.ndarray:
    """Inclusive grid alpha_min, alpha_min + step, ... <= alpha_max."""
    if step <= 0.0 or not alpha_min < alpha_max:
        raise DataError("need alpha_min < alpha_max and a positive step",
                        {"alpha_min": alpha_min, "alpha_max": alpha_max, "alpha_step": step})
    count = int(np.floor((alpha_max - alpha_min) / step + 1e-9)) + 1
    return alpha_min + step * np.arange(count)


def oracle_grid(mass_spectrum: Sequence[float], points: int = 600, range_factor: float = 1.5) -> np.ndarray:
    """[0, range_factor * (w1 + w2) / 2] in ``points`` steps, so the window edge is visible."""
    spectrum = np.sort(np.asarray(mass_spectrum, dtype=np.float64))
    if spectrum.size < 2:
        raise DataError("the oracle grid needs at least two mass eigenvalues")
    upper = range_factor * 0.5 * float(spectrum[0] + spectrum[1])
    if not upper > 0.0:
        raise DataError(f"oracle grid upper end {upper:g} is not positive")
    return np.linspace(0.0, upper, points + 1)


def blind_grid(recommended_alpha: float, points: int = 600, range_factor: float = 1.2) -> np.ndarray:
    """[0, range_factor * 2 * recommended_alpha] in ``points`` steps."""
    upper = range_factor * 2.0 * float(recommended_alpha)
    if not upper > 0.0:
        raise DataError(f"blind grid upper end {upper:g} is not positive; pass an explicit alpha range")
    return np.linspace(0.0, upper, points + 1)


def sweep(
    g1: np.ndarray,
    v1: np.ndarray,
    alpha_grid: Sequence[float],
    reference_spectrum: Optional[Sequence[float]] = None,
) -> SweepResult:
    """
    Evaluate F on an ascending alpha grid.

    With a reference (or estimated) mass spectrum every sample carries its
    window validity and ``best`` is the valid sample with the largest value,
    smallest alpha on ties (values within
    ``TIE_RTOL`` count as equal). Without one, validity is unknown and ``best`` is
    absent.
    """
    grid = np.asarray(alpha_grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size == 0:
        raise DataError("alpha grid is empty")
    if np.any(np.diff(grid) <= 0):
        raise DataError("alpha grid must be strictly ascending")

    values = f_alpha_curve(g1, v1, grid)
    samples = []
    best = None
    for alpha, value in zip(grid.tolist(), values.tolist()):
        if reference_spectrum is None:
            samples.append(BoundEvaluation(alpha=alpha, value=value))
            continue
        window = validity_window(reference_spectrum, alpha)
        sample = BoundEvaluation(alpha=alpha, value=value, valid=window.valid, window_margin=window.margin)
        samples.append(sample)
        if sample.valid and (best is None or sample.value > best.value + TIE_RTOL * max(1.0, abs(best.value))):
            best = sample

    logger.debug(f"sweep: {grid.size} samples on [{grid[0]:g}, {grid[-1]:g}], best={best}")
    return SweepResult(samples=samples, best=best)
