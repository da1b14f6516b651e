"""
Reproduction suite for the two reference chains.

For M1 and M2 the suite solves the pencil, estimates M' = G V^+ from the
first k = 1, 3, 5 pairs, evaluates F at alpha = rho / 2, sweeps F over the
oracle grid, and compares both recipes against the published lower bounds
(6.8 for M1 and 18.22 for M2 with three pairs), under both readings of the
chain's last stiffness entry. Everything is deterministic.
"""

from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from bounds import certified_bound, oracle_grid, sweep, window_edge
from estimation import estimate_mass, sigma1_check_stacked
from models import REFERENCE_MASSES, REFERENCE_SPRINGS, MassStiffnessSystem, build_chain, create_system, solve_pencil
from spectral import singular_values, sym_eigen
from states.state import RecipeResult, SystemReport
from utils.logging_utils import get_logger
from utils.utils import Settings, get_settings

logger = get_logger("reproduce")

REFERENCE_SYSTEMS = ("M1", "M2")
PAIR_COUNTS = (1, 3, 5)
PUBLISHED_W1 = {"M1": 15.0, "M2": 30.0}
PUBLISHED_BOUNDS = {("M1", 3): 6.8, ("M2", 3): 18.22}
BOUND_TOLERANCE = 0.5
GROUND_TRUTH_RTOL = 1e-9
SOUNDNESS_SLACK = 1e-9
TERMINAL_VARIANTS = ("printed", "summed")

ALPHA_SELECTION_NOTE = (
    "The published bounds do not say whether alpha = rho(G V^+)/2 with three pairs or the "
    "maximum of F over the validity window was used; both are reported."
)
STIFFNESS_VARIANT_NOTE = (
    "The printed stiffness matrix ends in k5 where a fixed-free chain would have k4 + k5; the "
    "published bounds are compared under both readings."
)


def analyze_system(
    name: str,
    system: MassStiffnessSystem,
    pair_counts: Sequence[int] = PAIR_COUNTS,
    settings: Optional[Settings] = None,
) -> SystemReport:
    """Sweep and k-pair recipes for one system, with the true mass spectrum as oracle."""
    settings = settings or get_settings()
    modal = solve_pencil(system)
    mass_spectrum = sym_eigen(system.mass).values
    edge = window_edge(mass_spectrum)
    g1, v1 = modal.pair(0)

    grid = oracle_grid(mass_spectrum, settings.grid_points, settings.oracle_range_factor)
    result = sweep(g1, v1, grid, mass_spectrum)

    recipes: List[RecipeResult] = []
    for k in pair_counts:
        left, right = modal.left_vectors[:, :k], modal.right_vectors[:, :k]
        estimate = estimate_mass(left, right)
        evaluation = certified_bound(g1, v1, estimate.recommended_alpha, mass_spectrum)
        recipes.append(RecipeResult(
            k=k,
            rho=estimate.rho,
            recommended_alpha=estimate.recommended_alpha,
            bound_at_recommended_alpha=evaluation.value,
            recommended_alpha_valid=bool(evaluation.valid),
            window_margin=float(evaluation.window_margin),
            edge_gap=edge - estimate.recommended_alpha,
            sigma1_holds=sigma1_check_stacked(left, right, system.mass).holds,
        ))
        logger.info(f"{name} k={k}: alpha={estimate.recommended_alpha:.6g} "
                    f"F={evaluation.value:.6g} valid={evaluation.valid}")

    best = result.best
    return SystemReport(
        system=name,
        true_w1=float(mass_spectrum[0]),
        true_w2=float(mass_spectrum[1]),
        window_edge=edge,
        sigma1_mass=float(singular_values(system.mass.array)[0]),
        pencil_eigenvalues=modal.eigenvalues.tolist(),
        sweep_best_alpha=None if best is None else best.alpha,
        sweep_best_value=None if best is None else best.value,
        recipes=recipes,
    )


def _soundness_violations(report: SystemReport) -> int:
    limit = report["true_w1"] + SOUNDNESS_SLACK * max(1.0, abs(report["true_w1"]))
    violations = sum(
        1 for recipe in report["recipes"]
        if recipe["recommended_alpha_valid"] and recipe["bound_at_recommended_alpha"] > limit
    )
    if report["sweep_best_value"] is not None and report["sweep_best_value"] > limit:
        violations += 1
    return violations


def _match(report: SystemReport, k: int, published: float) -> Dict[str, Any]:
    recipe = next(r for r in report["recipes"] if r["k"] == k)
    candidates = {"recommended_alpha": recipe["bound_at_recommended_alpha"],
                  "sweep_maximum": report["sweep_best_value"]}
    deltas = {key: (None if value is None else value - published) for key, value in candidates.items()}
    within = [key for key, delta in deltas.items() if delta is not None and abs(delta) <= BOUND_TOLERANCE]
    return {
        "k": k,
        "published_bound": published,
        "recommended_alpha_bound": candidates["recommended_alpha"],
        "sweep_maximum_bound": candidates["sweep_maximum"],
        "recommended_alpha_delta": deltas["recommended_alpha"],
        "sweep_maximum_delta": deltas["sweep_maximum"],
        "matching_recipes": within,
        "status": "PASS" if within else "FAIL",
    }


def compare_with_published(reports: Dict[str, SystemReport]) -> List[Dict[str, Any]]:
    """PASS when either recipe lands within the tolerance of the published bound."""
    return [{"system": name, **_match(reports[name], k, published)}
            for (name, k), published in sorted(PUBLISHED_BOUNDS.items())]


def compare_stiffness_variants(settings: Optional[Settings] = None) -> List[Dict[str, Any]]:
    """Published-bound comparison for each chain terminal variant of the reference systems."""
    settings = settings or get_settings()
    rows = []
    for (name, k), published in sorted(PUBLISHED_BOUNDS.items()):
        for terminal in TERMINAL_VARIANTS:
            system = build_chain(REFERENCE_MASSES[name], REFERENCE_SPRINGS, terminal)
            report = analyze_system(name, system, (k,), settings)
            rows.append({"system": name, "terminal": terminal, **_match(report, k, published)})
    return rows


def run_reproduction(settings: Optional[Settings] = None) -> Dict[str, Any]:
    """
    Full report for both reference systems.

    Returns:
        JSON-ready dict with per-system analyses, ground-truth checks, the
        comparison against published bounds, and a soundness count
    """
    settings = settings or get_settings()
    reports = {name: analyze_system(name, create_system(name), PAIR_COUNTS, settings)
               for name in REFERENCE_SYSTEMS}

    ground_truth = []
    for name in REFERENCE_SYSTEMS:
        computed = reports[name]["true_w1"]
        published = PUBLISHED_W1[name]
        ground_truth.append({
            "system": name,
            "published_w1": published,
            "computed_w1": computed,
            "status": "PASS" if abs(computed - published) <= GROUND_TRUTH_RTOL * published else "FAIL",
        })

    violations = sum(_soundness_violations(report) for report in reports.values())
    if violations:
        logger.error(f"{violations} bound(s) exceeded the true least mass eigenvalue")

    return {
        "systems": [reports[name] for name in REFERENCE_SYSTEMS],
        "ground_truth": ground_truth,
        "published_bounds": compare_with_published(reports),
        "alpha_selection_note": ALPHA_SELECTION_NOTE,
        "stiffness_variants": compare_stiffness_variants(settings),
        "stiffness_variant_note": STIFFNESS_VARIANT_NOTE,
        "soundness_violations": violations,
    }


def recommended_alphas(report: SystemReport) -> Dict[int, float]:
    return {recipe["k"]: recipe["recommended_alpha"] for recipe in report["recipes"]}


def system_curve(name: str, settings: Optional[Settings] = None):
    """Sweep result and true w1 for plotting a reference system."""
    settings = settings or get_settings()
    system = create_system(name)
    modal = solve_pencil(system)
    mass_spectrum = sym_eigen(system.mass).values
    g1, v1 = modal.pair(0)
    grid = oracle_grid(mass_spectrum, settings.grid_points, settings.oracle_range_factor)
    return sweep(g1, v1, grid, mass_spectrum), float(np.min(mass_spectrum))
