"""
JSON file schemas for systems, modal data and perturbations.

System file:  {"n": int, "mass": [[...]], "stiffness": [[...]]}
              or {"chain": {"masses": [...], "springs": [...], "terminal": "printed"}}
Modal file:   {"k": int, "eigenvalues": [...], "right": [[...]], "left": [[...]]}
              with eigenvector blocks stored column-major (one list per column).
Delta file:   {"delta_mass": [[...]], "delta_stiffness": [[...]] (optional)} or a bare
              list of rows for delta_mass alone.
"""

import json
import sys
from pathlib import Path
from typing import Any, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from models.base import MassStiffnessSystem, ModalData, Perturbation
from models.chain import build_chain
from spectral import SymmetricMatrix
from utils.exceptions import DataError, PreconditionViolated, safe_execute
from utils.logging_utils import get_logger

logger = get_logger("schemas")

Rows = List[List[float]]
BIORTHOGONALITY_TOLERANCE = 1e-8


class ChainSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    masses: List[float]
    springs: List[float]
    terminal: Literal["printed", "summed"] = "printed"


class SystemFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: Optional[int] = None
    mass: Optional[Rows] = None
    stiffness: Optional[Rows] = None
    chain: Optional[ChainSpec] = None

    @model_validator(mode="after")
    def _one_form(self) -> "SystemFile":
        dense = self.mass is not None or self.stiffness is not None
        if dense == (self.chain is not None):
            raise ValueError("give either n/mass/stiffness or chain, not both")
        if dense:
            if self.mass is None or self.stiffness is None or self.n is None:
                raise ValueError("dense form needs n, mass and stiffness")
            for name, rows in (("mass", self.mass), ("stiffness", self.stiffness)):
                if len(rows) != self.n or any(len(row) != self.n for row in rows):
                    raise ValueError(f"{name} must be {self.n}x{self.n}")
        return self

    def to_system(self) -> MassStiffnessSystem:
        if self.chain is not None:
            return build_chain(self.chain.masses, self.chain.springs, self.chain.terminal)
        return MassStiffnessSystem(
            mass=SymmetricMatrix.from_rows(self.mass),
            stiffness=SymmetricMatrix.from_rows(self.stiffness),
        )

    @classmethod
    def from_system(cls, system: MassStiffnessSystem) -> "SystemFile":
        return cls(n=system.n, mass=system.mass.to_rows(), stiffness=system.stiffness.to_rows())


class ModalFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int
    eigenvalues: List[float]
    right: Rows
    left: Rows

    @model_validator(mode="after")
    def _consistent(self) -> "ModalFile":
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if len(self.eigenvalues) != self.k or len(self.right) != self.k or len(self.left) != self.k:
            raise ValueError(f"expected {self.k} eigenvalues, right columns and left columns")
        lengths = {len(column) for column in self.right + self.left}
        if len(lengths) != 1:
            raise ValueError("all eigenvector columns must have the same length")
        return self

    def to_modal(self) -> ModalData:
        """
        Build modal data, requiring canonically scaled left vectors.

        Raises:
            PreconditionViolated: If max |G^T V - I_k| exceeds 1e-8; rescale
                measured left vectors with ``modal_from_measurements`` first
        """
        modal = ModalData(
            np.asarray(self.eigenvalues),
            np.asarray(self.right, dtype=np.float64).T,
            np.asarray(self.left, dtype=np.float64).T,
        )
        error = modal.biorthogonality_error()
        if error > BIORTHOGONALITY_TOLERANCE:
            raise PreconditionViolated(f"left and right vectors are not biorthonormal (max |G^T V - I| = {error:.3g})",
                                       {"biorthogonality_error": error})
        return modal

    @classmethod
    def from_modal(cls, modal: ModalData) -> "ModalFile":
        return cls(
            k=modal.k,
            eigenvalues=modal.eigenvalues.tolist(),
            right=modal.right_vectors.T.tolist(),
            left=modal.left_vectors.T.tolist(),
        )


class DeltaFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    delta_mass: Rows
    delta_stiffness: Optional[Rows] = None

    def to_perturbation(self) -> Perturbation:
        delta_stiffness = None
        if self.delta_stiffness is not None:
            delta_stiffness = SymmetricMatrix.from_rows(self.delta_stiffness)
        return Perturbation(SymmetricMatrix.from_rows(self.delta_mass), delta_stiffness)


def read_json(path: Union[str, Path]) -> Any:
    def _read():
        with open(path, "r") as handle:
            return json.load(handle)

    return safe_execute(_read, error_message=f"Cannot read JSON from {path}", error_cls=DataError, log_error=False)


def _validate(model_cls, payload: Any, source: Union[str, Path]):
    return safe_execute(model_cls.model_validate, args=(payload,),
                        error_message=f"Invalid {model_cls.__name__} in {source}",
                        error_cls=DataError, log_error=False)


def load_system(path: Union[str, Path]) -> MassStiffnessSystem:
    system = _validate(SystemFile, read_json(path), path).to_system()
    logger.info(f"Loaded {system.n}-DOF system from {path}")
    return system


def load_modal(path: Union[str, Path]) -> ModalData:
    return _validate(ModalFile, read_json(path), path).to_modal()


def load_perturbation(path: Union[str, Path]) -> Perturbation:
    payload = read_json(path)
    if isinstance(payload, list):
        payload = {"delta_mass": payload}
    return _validate(DeltaFile, payload, path).to_perturbation()


def round_floats(value: Any, digits: int) -> Any:
    """Round every float in a JSON-ready structure to ``digits`` significant digits."""
    if isinstance(value, float):
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {key: round_floats(item, digits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(item, digits) for item in value]
    return value


def dump_json(payload: Any, path: Optional[Union[str, Path]] = None, digits: int = 17) -> str:
    """Serialize to JSON text and write it to ``path`` (or stdout when omitted)."""
    text = json.dumps(round_floats(payload, digits), indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
        return text

    def _write():
        with open(path, "w") as handle:
            handle.write(text)

    safe_execute(_write, error_message=f"Cannot write {path}", error_cls=DataError, log_error=False)
    return text
