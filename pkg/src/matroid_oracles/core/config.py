"""Configuration management with Pydantic validation."""

import os
from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BUDGET_ENV_VAR = "MATROID_ORACLES_BRUTE_FORCE_BUDGET"

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class AppConfig(BaseModel):
    """Application configuration."""

    name: str = "Matroid Oracles"
    log_level: LogLevel = "INFO"  # threshold of the matroid_oracles logger


class LoggingConfig(BaseModel):
    """Logging configuration."""

    console_level: str = "WARNING"
    file_level: str = "DEBUG"
    log_file: Optional[str] = None
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class SolverConfig(BaseModel):
    """Restricted solver configuration."""

    audit: bool = False  # FullPair assertions at every Bellman-Ford / BFS update
    bfs_depth_cap: Optional[int] = None  # None = ground-set size


class VerifyConfig(BaseModel):
    """Brute-force verification configuration."""

    brute_force_budget: int = Field(default=24, ge=1, le=30)
    corpus_size: int = Field(default=500, ge=1)
    corpus_seed: int = 0
    max_n: int = Field(default=10, ge=1, le=20)
    query_budget_factor: int = 8  # Sum queries per solve <= factor * n^5


class GeneratorSettings(BaseModel):
    """Default random instance generation parameters."""

    n: int = Field(default=8, ge=1, le=64)
    weight_min: int = -5
    weight_max: int = 20
    m1_kinds: list[str] = Field(
        default_factory=lambda: ["uniform", "partition", "graphic", "split", "truncation"]
    )
    m2_kinds: list[str] = Field(
        default_factory=lambda: ["uniform", "partition", "graphic", "split", "truncation"]
    )


class WitnessConfig(BaseModel):
    """Separation witness search space."""

    max_vertices: int = Field(default=5, ge=2)
    edge_count: int = Field(default=4, ge=1, le=6)
    truncation: int = Field(default=3, ge=1)


class Settings(BaseSettings):
    """Main settings class combining all configuration."""

    model_config = SettingsConfigDict(
        env_prefix="",
        env_nested_delimiter="__",
        extra="ignore",
    )

    app: AppConfig = Field(default_factory=AppConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    generator: GeneratorSettings = Field(default_factory=GeneratorSettings)
    witness: WitnessConfig = Field(default_factory=WitnessConfig)


def load_config(config_path: Optional[Path] = None) -> Settings:
    """Load configuration from YAML file and environment variables.

    Args:
        config_path: Path to YAML configuration file.
                    If None, looks for config/default.yaml.

    Returns:
        Validated Settings instance.
    """
    config_data: dict[str, Any] = {}

    if config_path is None:
        search_paths = [
            Path("config/default.yaml"),
            Path("config.yaml"),
            Path.home() / ".matroid_oracles" / "config.yaml",
        ]
        for path in search_paths:
            if path.exists():
                config_path = path
                break

    if config_path and config_path.exists():
        with open(config_path) as f:
            config_data = yaml.safe_load(f) or {}

    budget = os.environ.get(BUDGET_ENV_VAR)
    if budget is not None:
        config_data.setdefault("verify", {})["brute_force_budget"] = int(budget)

    return Settings(**config_data)


def save_config(settings: Settings, config_path: Path) -> None:
    """Save configuration to YAML file.

    Args:
        settings: Settings instance to save.
        config_path: Path to save the configuration.
    """
    data = settings.model_dump()

    config_path.parent.mkdir(parents=True, exist_ok=True)

    with open(config_path, "w") as f:
        yaml.safe_dump(data, f, default_flow_style=False, sort_keys=False)
