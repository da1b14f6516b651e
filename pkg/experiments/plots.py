"""
SVG rendering of F(alpha) curves.

The part of the curve inside the validity window is drawn as a blue dash;
in oracle mode a horizontal line marks the true w1.
"""

from pathlib import Path
from typing import Mapping, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from bounds import SweepResult  # noqa: E402
from utils.exceptions import DataError, safe_execute  # noqa: E402
from utils.logging_utils import get_logger  # noqa: E402

logger = get_logger("plots")

CANVAS_PX = (800, 500)
# matplotlib writes SVG in points; 72 dpi makes one point one pixel
SVG_DPI = 72


def render_sweep_svg(
    result: SweepResult,
    path: Union[str, Path],
    true_w1: Optional[float] = None,
    recommended: Optional[Mapping[int, float]] = None,
    title: Optional[str] = None,
) -> Path:
    """
    Write an 800 x 500 SVG of F(alpha) against alpha.

    Args:
        result: Sweep to draw
        path: Output file
        true_w1: Known least mass eigenvalue (oracle mode)
        recommended: Optional {k: alpha} markers for the k-pair recipes
        title: Plot title
    """
    plt.rcParams["svg.hashsalt"] = "massbound"
    alphas, values = result.alphas, result.values
    inside = np.array([sample.valid is True for sample in result.samples])

    fig, ax = plt.subplots(figsize=(CANVAS_PX[0] / SVG_DPI, CANVAS_PX[1] / SVG_DPI), dpi=SVG_DPI)
    ax.plot(alphas, values, color="0.55", linewidth=1.2, label=r"$F(\alpha)$")
    if inside.any():
        ax.plot(alphas, np.where(inside, values, np.nan), color="tab:blue", linestyle="--",
                linewidth=2.0, label=r"$|w_1-\alpha| < |w_2-\alpha|$")
    if true_w1 is not None:
        ax.axhline(true_w1, color="tab:red", linestyle=":", linewidth=1.2, label=f"true $w_1$ = {true_w1:g}")
    for k, alpha in sorted((recommended or {}).items()):
        ax.axvline(alpha, color="0.3", linestyle="-.", linewidth=0.8)
        ax.annotate(f"k={k}", xy=(alpha, ax.get_ylim()[1]), xytext=(2, -12),
                    textcoords="offset points", fontsize=8)
    ax.axhline(0.0, color="black", linewidth=0.6)
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$F(\alpha)$")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="lower left", fontsize=8)
    fig.tight_layout()

    path = Path(path)
    try:
        safe_execute(fig.savefig, args=(path,), kwargs={"format": "svg", "metadata": {"Date": None}},
                     error_message=f"Cannot write plot {path}", error_cls=DataError, log_error=False)
    finally:
        plt.close(fig)
    logger.info(f"Wrote plot {path}")
    return path
