"""Tests for the knotcs.cli.config module."""

from pathlib import Path

import click
import pytest

from knotcs.cli.config import OutputFormat, RunConfig, load_run_config, resolve
from knotcs.errors import DomainError


class TestRunConfig:
    """RunConfig validates its fields."""

    def test_defaults(self) -> None:
        config = RunConfig()
        assert config.intervals == 10000
        assert config.format is OutputFormat.TEXT
        assert config.settings.quadrature.intervals == 10000

    @pytest.mark.parametrize(
        "fields",
        [
            {"intervals": 3},
            {"intervals": 0},
            {"root_tol": 0.0},
            {"jobs": 0},
            {"precision": 0},
        ],
    )
    def test_invalid(self, fields: dict) -> None:
        with pytest.raises(DomainError):
            RunConfig(**fields)


class TestLoadRunConfig:
    """load_run_config reads YAML through dacite."""

    def test_valid(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("version: 0\nintervals: 2000\nroot_tol: 1e-12\nformat: csv\n")
        config = load_run_config(path)
        assert config.intervals == 2000
        assert config.root_tol == pytest.approx(1e-12)
        assert config.format is OutputFormat.CSV

    def test_empty_file_gives_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("")
        assert load_run_config(path) == RunConfig()

    def test_missing(self, tmp_path: Path) -> None:
        with pytest.raises(click.ClickException, match="Run config not found"):
            load_run_config(tmp_path / "absent.yaml")

    def test_bad_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("intervals: [1, 2\n")
        with pytest.raises(click.ClickException, match="Invalid YAML in"):
            load_run_config(path)

    def test_not_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(click.ClickException, match="must be a mapping"):
            load_run_config(path)

    @pytest.mark.parametrize(
        "content",
        [
            "unknown: 1\n",
            "format: xml\n",
            "intervals: 7\n",
        ],
    )
    def test_invalid_content(self, tmp_path: Path, content: str) -> None:
        path = tmp_path / "run.yaml"
        path.write_text(content)
        with pytest.raises(click.ClickException, match="Invalid run config"):
            load_run_config(path)

    def test_unsupported_version(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("version: 1\n")
        with pytest.raises(click.ClickException, match="Unsupported run config version"):
            load_run_config(path)


class TestResolve:
    """resolve applies overrides that are set."""

    def test_none_is_ignored(self) -> None:
        config = resolve(RunConfig(intervals=2000), intervals=None, jobs=4)
        assert config.intervals == 2000
        assert config.jobs == 4

    def test_invalid_override(self) -> None:
        with pytest.raises(click.BadParameter):
            resolve(RunConfig(), precision=0)
