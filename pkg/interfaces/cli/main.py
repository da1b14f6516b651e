"""
Command-line front end for massbound.

Subcommands:
    gen            write a reference system (M1, M2) as a JSON system file
    modal          solve a system file and write truncated modal data
    sweep          evaluate F(alpha) over a grid (CSV or JSON, optional SVG)
    estimate       surrogate-mass estimates for k = 1..K pairs
    reproduce      deterministic report for both reference systems
    check-perturb  Weyl admissibility of a mass perturbation

Exit codes: 0 success/admissible, 1 input error, 2 numerical failure,
3 perturbation not certified.
"""

import argparse
import io
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from bounds import admissible_perturbation, alpha_grid, blind_grid, oracle_grid, sweep
from estimation import estimate_mass, estimate_sequence, sigma1_check_stacked
from experiments import render_sweep_svg, run_reproduction, system_curve
from experiments.reproduce import recommended_alphas
from models import MassStiffnessSystem, ModalData, create_system, solve_pencil
from models.schemas import ModalFile, SystemFile, dump_json, load_modal, load_perturbation, load_system
from spectral import sym_eigen
from states import RunConfig, SweepRow
from utils.exceptions import BaseAppException, DataError, DimensionMismatch, safe_execute
from utils.logging_utils import get_logger, set_log_level
from utils.utils import Settings, get_settings, load_config

logger = get_logger("cli")

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOT_CERTIFIED = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the input-error code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _write_text(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return

    def _write():
        Path(out).write_text(text)

    safe_execute(_write, error_message=f"Cannot write {out}", error_cls=DataError, log_error=False)


def _check_system_matches(system: MassStiffnessSystem, modal: ModalData) -> None:
    if system.n != modal.n:
        raise DimensionMismatch(f"system has n={system.n}, modal data has n={modal.n}")


# ----------------------------------------------------------------- commands

def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    system = create_system(args.name)
    payload = SystemFile.from_system(system).model_dump(exclude_none=True)
    dump_json(payload, args.out, settings.json_digits)
    logger.info(f"Wrote system {args.name} (n={system.n})" + (f" to {args.out}" if args.out else ""))
    return EXIT_OK


def cmd_modal(args: argparse.Namespace, settings: Settings) -> int:
    system = load_system(args.system)
    k = system.n if args.k is None else args.k
    if not 1 <= k <= system.n:
        raise DataError(f"--k must be between 1 and {system.n}, got {k}")
    modal = solve_pencil(system).truncate(k)
    dump_json(ModalFile.from_modal(modal).model_dump(), args.out, settings.json_digits)
    logger.info(f"Wrote {k} modal pair(s)" + (f" to {args.out}" if args.out else ""))
    return EXIT_OK


def _run_config(args: argparse.Namespace) -> RunConfig:
    fields = {
        "modal_path": args.modal,
        "system_path": args.system,
        "k": args.k,
        "alpha_min": args.alpha_min,
        "alpha_max": args.alpha_max,
        "alpha_step": args.alpha_step,
        "output_format": args.format,
        "out": args.out,
        "plot": args.plot,
        "mode": args.mode,
    }
    return safe_execute(RunConfig.model_validate, args=(fields,), error_message="Invalid sweep options",
                        error_cls=DataError, log_error=False)


def _sweep_grid(config: RunConfig, modal: ModalData, mass_spectrum: Optional[np.ndarray],
                settings: Settings) -> np.ndarray:
    explicit = (config.alpha_min, config.alpha_max)
    if any(value is not None for value in explicit):
        if None in explicit:
            raise DataError("--alpha-min and --alpha-max must be given together")
        step = config.alpha_step or (config.alpha_max - config.alpha_min) / settings.grid_points
        return alpha_grid(config.alpha_min, config.alpha_max, step)
    if config.alpha_step is not None:
        raise DataError("--alpha-step needs --alpha-min and --alpha-max")
    if mass_spectrum is not None:
        return oracle_grid(mass_spectrum, settings.grid_points, settings.oracle_range_factor)
    estimate = estimate_mass(modal.left_vectors, modal.right_vectors)
    return blind_grid(estimate.recommended_alpha, settings.grid_points, settings.blind_range_factor)


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    config = _run_config(args)
    modal = load_modal(config.modal_path)
    if config.k is not None:
        modal = modal.truncate(config.k)

    mass_spectrum = None
    if config.mode == "oracle":
        system = load_system(config.system_path)
        _check_system_matches(system, modal)
        mass_spectrum = sym_eigen(system.mass).values

    g1, v1 = modal.pair(0)
    result = sweep(g1, v1, _sweep_grid(config, modal, mass_spectrum, settings), mass_spectrum)
    rows: List[SweepRow] = [
        SweepRow(alpha=s.alpha, F_alpha=s.value, valid=s.validity_label) for s in result.samples
    ]

    if config.output_format == "csv":
        buffer = io.StringIO()
        pd.DataFrame(rows, columns=list(SweepRow.__annotations__)).to_csv(
            buffer, index=False, float_format=f"%.{settings.csv_digits}g", lineterminator="\n")
        _write_text(buffer.getvalue(), config.out)
    else:
        payload: Dict[str, Any] = {"mode": config.mode, "k": modal.k, "samples": rows}
        if result.best is not None:
            payload["best"] = {"alpha": result.best.alpha, "F_alpha": result.best.value}
        dump_json(payload, config.out, settings.json_digits)

    if config.plot:
        true_w1 = None if mass_spectrum is None else float(mass_spectrum[0])
        recommended = {modal.k: estimate_mass(modal.left_vectors, modal.right_vectors).recommended_alpha}
        render_sweep_svg(result, config.plot, true_w1=true_w1, recommended=recommended,
                         title=f"F(alpha), {config.mode} mode, k={modal.k}")

    logger.info(f"Swept {len(rows)} alpha values in {config.mode} mode")
    return EXIT_OK


def cmd_estimate(args: argparse.Namespace, settings: Settings) -> int:
    modal = load_modal(args.modal)
    if args.k is not None:
        modal = modal.truncate(args.k)
    system = load_system(args.system) if args.system else None
    if system is not None:
        _check_system_matches(system, modal)

    entries = []
    for estimate in estimate_sequence(modal.left_vectors, modal.right_vectors):
        entry: Dict[str, Any] = {"k": estimate.k, "rho": estimate.rho,
                                 "recommended_alpha": estimate.recommended_alpha}
        if system is not None:
            check = sigma1_check_stacked(estimate.left, estimate.right, system.mass)
            entry.update(sigma1_estimate=check.lhs, sigma1_mass=check.rhs, sigma1_holds=check.holds)
        entries.append(entry)

    dump_json({"estimates": entries}, args.out, settings.json_digits)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, settings: Settings) -> int:
    report = run_reproduction(settings)
    dump_json(report, args.out, settings.json_digits)

    if args.plot_dir:
        plot_dir = Path(args.plot_dir)
        safe_execute(plot_dir.mkdir, kwargs={"parents": True, "exist_ok": True},
                     error_message=f"Cannot create {plot_dir}", error_cls=DataError, log_error=False)
        for system_report in report["systems"]:
            name = system_report["system"]
            result, true_w1 = system_curve(name, settings)
            render_sweep_svg(result, plot_dir / f"{name.lower()}_sweep.svg", true_w1=true_w1,
                             recommended=recommended_alphas(system_report), title=f"F(alpha) for {name}")

    failed = [row for row in report["ground_truth"] + report["published_bounds"] if row["status"] != "PASS"]
    if failed:
        logger.warning(f"{len(failed)} comparison(s) failed; see the report")
    return EXIT_OK


def cmd_check_perturb(args: argparse.Namespace, settings: Settings) -> int:
    perturbation = load_perturbation(args.delta)
    verdict = admissible_perturbation(args.bound, perturbation.delta_mass)
    dump_json({"bound": args.bound, "admissible": verdict.admissible, "margin": verdict.margin,
               "verdict": "admissible" if verdict.admissible else "not certified"},
              None, settings.json_digits)
    return EXIT_OK if verdict.admissible else EXIT_NOT_CERTIFIED


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="massbound",
        description="Certified lower bounds on the least mass eigenvalue from modal eigenvector pairs.",
    )
    parser.add_argument("--config", help="YAML settings file (default: config/config.yaml)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a reference system file")
    gen.add_argument("name", help="registered system name (M1 or M2)")
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    modal = commands.add_parser("modal", help="solve a system and write modal data")
    modal.add_argument("system", help="system JSON file")
    modal.add_argument("--k", type=int, help="number of lowest modes to keep (default: all)")
    modal.add_argument("--out", help="output path (default: stdout)")
    modal.set_defaults(handler=cmd_modal)

    sweep_cmd = commands.add_parser("sweep", help="evaluate F(alpha) over an alpha grid")
    sweep_cmd.add_argument("modal", help="modal data JSON file")
    sweep_cmd.add_argument("--system", help="system JSON file (required in oracle mode)")
    sweep_cmd.add_argument("--mode", choices=("oracle", "blind"), default="blind")
    sweep_cmd.add_argument("--k", type=int, help="use only the first k pairs")
    sweep_cmd.add_argument("--alpha-min", type=float)
    sweep_cmd.add_argument("--alpha-max", type=float)
    sweep_cmd.add_argument("--alpha-step", type=float)
    sweep_cmd.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_cmd.add_argument("--out", help="output path (default: stdout)")
    sweep_cmd.add_argument("--plot", help="SVG output path")
    sweep_cmd.set_defaults(handler=cmd_sweep)

    estimate = commands.add_parser("estimate", help="surrogate mass estimates for k = 1..K")
    estimate.add_argument("modal", help="modal data JSON file")
    estimate.add_argument("--system", help="system JSON file, adds the sigma_1 check")
    estimate.add_argument("--k", type=int, help="use only the first k pairs")
    estimate.add_argument("--out", help="output path (default: stdout)")
    estimate.set_defaults(handler=cmd_estimate)

    reproduce = commands.add_parser("reproduce", help="report for the reference systems M1 and M2")
    reproduce.add_argument("--out", help="report path (default: stdout)")
    reproduce.add_argument("--plot-dir", help="directory for per-system SVG figures")
    reproduce.set_defaults(handler=cmd_reproduce)

    perturb = commands.add_parser("check-perturb", help="Weyl admissibility of a mass perturbation")
    perturb.add_argument("--bound", type=float, required=True, help="certified lower bound L on w1")
    perturb.add_argument("delta", help="delta JSON file")
    perturb.set_defaults(handler=cmd_check_perturb)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_config(args.config) if args.config else get_settings()
        set_log_level("DEBUG" if args.verbose else settings.log_level)
        return args.handler(args, settings)
    except BaseAppException as e:
        e.log(include_traceback=args.verbose)
        sys.stderr.write(f"error: {e.message}\n")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
