import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from utils.exceptions import ConfigError
from utils.logging_utils import get_logger

logger = get_logger("config")

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "config.yaml"
ENV_PREFIX = "MASSBOUND_"


class Settings(BaseModel):
    """Grid defaults, output precision and log level."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    grid_points: int = Field(600, ge=2)
    oracle_range_factor: float = Field(1.5, gt=0)
    blind_range_factor: float = Field(1.2, gt=0)
    json_digits: int = Field(17, ge=1, le=17)
    csv_digits: int = Field(9, ge=1, le=17)
    log_level: str = "INFO"
    seed: int = 0


# for loading the YAML config, with .env and MASSBOUND_* environment overrides
def load_config(file_path: Optional[Union[str, Path]] = None) -> Settings:
    path = Path(file_path) if file_path else DEFAULT_CONFIG_PATH
    load_dotenv()

    values: Dict[str, Any] = {}
    if path.exists():
        try:
            with open(path, "r") as file:
                values = yaml.safe_load(file) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Cannot parse config file {path}", {"original_error": str(e)})
        if not isinstance(values, dict):
            raise ConfigError(f"Config file {path} must contain a mapping")
    elif file_path:
        raise ConfigError(f"Config file {path} not found")

    for key in Settings.model_fields:
        env_value = os.environ.get(ENV_PREFIX + key.upper())
        # Empty values fall back to the file/default
        if env_value:
            values[key] = env_value

    try:
        settings = Settings(**values)
    except ValidationError as e:
        raise ConfigError(f"Invalid settings in {path}", {"errors": e.errors(include_url=False)})
    logger.debug(f"Loaded settings from {path}: {settings.model_dump()}")
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_config()
