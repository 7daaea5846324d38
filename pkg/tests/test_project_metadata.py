"""Checks on the declared dependencies in pyproject.toml."""

from pathlib import Path

import pytest

tomllib = pytest.importorskip("tomllib")

PYPROJECT = Path(__file__).resolve().parent.parent / "pyproject.toml"


def _project() -> dict:
    with PYPROJECT.open("rb") as handle:
        return tomllib.load(handle)["project"]


def test_runtime_dependencies() -> None:
    names = {requirement.split(">=")[0] for requirement in _project()["dependencies"]}
    assert names == {"fastmcp", "pydantic", "sympy"}


def test_dev_extras_are_the_tools_in_use() -> None:
    assert set(_project()["optional-dependencies"]["dev"]) == {
        "pre-commit",
        "pytest",
        "pytest-asyncio",
        "pytest-cov",
        "pytest-subtests",
        "mypy",
        "pylint",
        "autopep8",
    }
