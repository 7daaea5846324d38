"""Test get_instructions and toolset selection of the unified server."""

import pytest

from slope_calc.server import get_instructions, parse_toolsets
from slope_calc.toolsets import MCPS


def test_instructions_cover_every_allowed_toolset() -> None:
    """Each mounted toolset contributes a section headed by its server name."""
    allowed_mcps = [mcp.toolset_name for mcp in MCPS]
    instructions = get_instructions(allowed_mcps)
    for mcp in MCPS:
        assert f"## {mcp.name}" in instructions


def test_instructions_omit_toolsets_not_allowed() -> None:
    instructions = get_instructions(["word-oracle"])
    assert "## Word Oracle MCP Server" in instructions
    assert "## Braid Invariants MCP Server" not in instructions


def test_parse_toolsets_all() -> None:
    assert parse_toolsets("all") == ["braid", "mapping-class", "satellite", "extendability", "word-oracle"]


def test_parse_toolsets_comma_separated() -> None:
    assert parse_toolsets(" braid, word-oracle ") == ["braid", "word-oracle"]


def test_parse_toolsets_unknown() -> None:
    with pytest.raises(ValueError, match="Unknown toolset"):
        parse_toolsets("braid,inventory")
