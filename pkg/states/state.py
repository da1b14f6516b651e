from typing import List, Literal, Optional, TypedDict

from pydantic import BaseModel, ConfigDict, Field, model_validator

Mode = Literal["oracle", "blind"]
OutputFormat = Literal["csv", "json"]


# Run configuration shared by the CLI commands
class RunConfig(BaseModel):
    """
    Settings for one sweep/estimate run.

    A missing alpha range or step falls back to the mode's default grid.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    modal_path: Optional[str] = None
    system_path: Optional[str] = None
    k: Optional[int] = Field(None, ge=1)
    alpha_min: Optional[float] = None
    alpha_max: Optional[float] = None
    alpha_step: Optional[float] = Field(None, gt=0)
    output_format: OutputFormat = "csv"
    out: Optional[str] = None
    plot: Optional[str] = None
    mode: Mode = "blind"

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.alpha_min is not None and self.alpha_max is not None and not self.alpha_min < self.alpha_max:
            raise ValueError("alpha_min must be smaller than alpha_max")
        if self.mode == "oracle" and self.system_path is None:
            raise ValueError("oracle mode needs the system file (--system)")
        return self


class SweepRow(TypedDict):
    alpha: float
    F_alpha: float
    valid: str


class RecipeResult(TypedDict):
    """One k-pair estimate evaluated against the reference system."""

    k: int
    rho: float
    recommended_alpha: float
    bound_at_recommended_alpha: float
    recommended_alpha_valid: bool
    window_margin: float
    edge_gap: float
    sigma1_holds: bool


class SystemReport(TypedDict):
    system: str
    true_w1: float
    true_w2: float
    window_edge: float
    sigma1_mass: float
    pencil_eigenvalues: List[float]
    sweep_best_alpha: Optional[float]
    sweep_best_value: Optional[float]
    recipes: List[RecipeResult]
