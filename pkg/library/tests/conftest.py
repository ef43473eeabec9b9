"""Shared pytest fixtures for knotcs tests."""

import json
from pathlib import Path

import pytest


def _load(name: str) -> list[dict]:
    path = Path(__file__).parent / "fixtures" / "reference" / name
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def reference_dir() -> Path:
    """Return path to the reference tables directory."""
    return Path(__file__).parent / "fixtures" / "reference"


@pytest.fixture(scope="session")
def orbifold_table() -> dict[tuple[int, int], dict]:
    """Reference orbifold and covering values keyed by (n, k)."""
    return {(row["n"], row["k"]): row for row in _load("orbifolds.json")}


@pytest.fixture(scope="session")
def knot_table() -> dict[int, dict]:
    """Reference alpha0 and knot values keyed by n."""
    return {row["n"]: row for row in _load("knots.json")}
