"""Experiment configuration loaded from a YAML file."""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .exceptions import ConfigError
from .records import SignalKind
from .selection.base import StrategyConfig, StrategyKind

logger = logging.getLogger(__name__)

KNOWN_DOMAINS = ("golf", "telephone", "surveillance")


class DomainSettings(BaseModel):
    """Which environment to simulate."""

    name: str = Field("golf", description="Domain name")
    signal_kind: Optional[SignalKind] = Field(None, description="Signal kind (domain default)")
    utility_range: Optional[Tuple[float, float]] = Field(
        None, description="(U_min, U_max) override"
    )
    options: Dict[str, Any] = Field(
        default_factory=dict, description="Extra domain constructor options (map_seed, holes, ...)"
    )

    @field_validator("name")
    @classmethod
    def known_domain(cls, v: str) -> str:
        if v not in KNOWN_DOMAINS:
            raise ValueError(f"unknown domain '{v}' (expected one of: {', '.join(KNOWN_DOMAINS)})")
        return v


class ModelSettings(BaseModel):
    """Offline training settings."""

    episodes_per_pair: int = Field(1000, ge=1, description="Training episodes per pair")
    smoothing_alpha: float = Field(0.01, gt=0.0, description="Laplace smoothing of counts")
    sd_floor: float = Field(1e-3, gt=0.0, description="Lower bound on Gaussian sd")
    prior: Optional[List[float]] = Field(None, description="Prior weights over types")


class SelectionSettings(BaseModel):
    """Strategies to evaluate (run uses the first)."""

    strategies: List[StrategyConfig] = Field(
        default_factory=lambda: [StrategyConfig(kind=StrategyKind.GREEDY)],
        description="Strategy configurations",
    )

    @field_validator("strategies")
    @classmethod
    def non_empty(cls, v: List[StrategyConfig]) -> List[StrategyConfig]:
        if not v:
            raise ValueError("at least one strategy is required")
        names = [s.name for s in v]
        if len(set(names)) != len(names):
            raise ValueError(f"strategy names must be unique, got {names}")
        return v


class HarnessSettings(BaseModel):
    """Experiment orchestration settings."""

    seed: int = Field(0, ge=0, description="Master seed")
    output: str = Field("results", description="Output directory")
    kb_path: Optional[str] = Field(None, description="Knowledge-base file (output/kb.json)")
    episodes: int = Field(8, ge=1, description="Horizon K")
    tasks: int = Field(100, ge=1, description="Number of evaluation tasks")
    library_fraction: float = Field(1.0, gt=0.0, le=1.0, description="Library size fraction")
    sweep_fractions: List[float] = Field(
        default_factory=lambda: [0.25, 0.5, 0.75, 1.0], description="Sweep library fractions"
    )
    sweep_episodes: List[int] = Field(
        default_factory=lambda: [5, 10, 20, 50], description="Sweep horizons"
    )
    sweep_trials: int = Field(200, ge=1, description="Trials per sweep cell")
    max_workers: int = Field(4, ge=1, description="Concurrent run units")
    oracle_episodes: int = Field(100_000, ge=1, description="Monte Carlo episodes of the oracle")

    @model_validator(mode="after")
    def check_grid(self) -> "HarnessSettings":
        if not self.sweep_fractions or not self.sweep_episodes:
            raise ValueError("sweep grids must be non-empty")
        if any(not 0.0 < f <= 1.0 for f in self.sweep_fractions):
            raise ValueError("sweep fractions must lie in (0, 1]")
        if any(k < 1 for k in self.sweep_episodes):
            raise ValueError("sweep horizons must be >= 1")
        return self

    def kb_file(self) -> Path:
        return Path(self.kb_path) if self.kb_path else Path(self.output) / "kb.json"


class LoggingSettings(BaseModel):
    """Logging settings."""

    level: str = Field("INFO", description="DEBUG, INFO, WARNING, ERROR")
    format: str = Field(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s", description="Record format"
    )


class ExperimentConfig(BaseModel):
    """Complete experiment configuration (the ``bpr:`` section)."""

    domain: DomainSettings = Field(default_factory=DomainSettings)
    models: ModelSettings = Field(default_factory=ModelSettings)
    selection: SelectionSettings = Field(default_factory=SelectionSettings)
    harness: HarnessSettings = Field(default_factory=HarnessSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def parse_config(data: Optional[Dict[str, Any]], source: str = "<memory>") -> ExperimentConfig:
    """
    Validate a configuration mapping.

    Args:
        data: Parsed YAML document (with or without the top-level ``bpr`` key)
        source: Where the mapping came from, for error messages

    Returns:
        Validated configuration

    Raises:
        ConfigError: If validation fails
    """
    data = data or {}
    if not isinstance(data, dict):
        raise ConfigError(source, "top level must be a mapping")
    section = data.get("bpr", data)
    try:
        return ExperimentConfig.model_validate(section or {})
    except ValidationError as e:
        raise ConfigError(source, str(e), {"errors": e.errors(include_url=False)}) from e


def load_config(path: str | Path) -> ExperimentConfig:
    """
    Load configuration from a YAML file.

    Raises:
        ConfigError: If the file is missing, unparsable or invalid
    """
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError as e:
        raise ConfigError(str(path), "file not found") from e
    except yaml.YAMLError as e:
        raise ConfigError(str(path), f"invalid YAML ({e})") from e
    logger.debug(f"Loaded configuration from {path}")
    return parse_config(data, str(path))
