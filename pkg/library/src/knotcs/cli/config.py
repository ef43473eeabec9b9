"""Run configuration shared by every command."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import StrEnum
from pathlib import Path

import click
import dacite
import yaml

from ..errors import DomainError
from ..geometry import DEFAULT_ALPHA0_TOL
from ..roots import DEFAULT_TOL
from ..scripting.knotcs_table import ComputeSettings


class OutputFormat(StrEnum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    """Numerical and output settings of a run."""

    version: int = 0
    intervals: int = 10000
    root_tol: float = DEFAULT_TOL
    alpha0_tol: float = DEFAULT_ALPHA0_TOL
    format: OutputFormat = OutputFormat.TEXT
    jobs: int = 1
    precision: int = 6

    def __post_init__(self) -> None:
        if self.intervals < 2 or self.intervals % 2:
            raise DomainError(f"intervals must be even and >= 2, got {self.intervals}")
        if self.root_tol <= 0 or self.alpha0_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.jobs < 1:
            raise DomainError(f"jobs must be at least 1, got {self.jobs}")
        if self.precision < 1:
            raise DomainError(f"precision must be at least 1, got {self.precision}")

    @property
    def settings(self) -> ComputeSettings:
        return ComputeSettings(
            intervals=self.intervals,
            root_tol=self.root_tol,
            alpha0_tol=self.alpha0_tol,
        )


def load_run_config(config_path: Path) -> RunConfig:
    """Load a RunConfig from a YAML file."""

    def coerce_float(value: object) -> float:
        # YAML 1.1 reads 1e-12 (no dot) as a string
        if isinstance(value, bool):
            raise TypeError("Cannot coerce bool to float")
        if isinstance(value, (int, float, str)):
            return float(value)
        raise TypeError(f"Cannot coerce {type(value)} to float")

    try:
        content = config_path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise click.ClickException(f"Run config not found: {config_path}") from exc

    try:
        data = yaml.safe_load(content) or {}
    except yaml.YAMLError as exc:
        raise click.ClickException(f"Invalid YAML in {config_path}: {exc}") from exc

    if not isinstance(data, dict):
        raise click.ClickException("Run config must be a mapping.")

    try:
        config = dacite.from_dict(
            RunConfig,
            data,
            config=dacite.Config(
                type_hooks={float: coerce_float},
                cast=[OutputFormat],
                strict=True,
            ),
        )
    except (dacite.DaciteError, TypeError, ValueError) as exc:
        raise click.ClickException(f"Invalid run config: {exc}") from exc

    if config.version != 0:
        raise click.ClickException(f"Unsupported run config version: {config.version}")

    return config


def resolve(config: RunConfig, **overrides: object) -> RunConfig:
    """Return config with every override that is not None applied."""
    given = {key: value for key, value in overrides.items() if value is not None}
    try:
        return replace(config, **given)
    except DomainError as exc:
        raise click.BadParameter(str(exc)) from exc
