"""Regression tests: calculator failures surface as CallToolResult with isError set."""

import pytest
from fastmcp import Client


@pytest.mark.asyncio
@pytest.mark.parametrize(
    ("tool_name", "arguments", "expected_substring"),
    [
        (
            "satellite__braid_torus_norm",
            {"word": "1", "strands": 2, "slopes": ["0/1"]},
            "[nontrivial-knot] braid torus norm requires a nontrivial associated knot",
        ),
        (
            "braid__braid_invariants",
            {"word": "1 1", "strands": 2},
            "braid closure has 2 components",
        ),
        (
            "mapping-class__mapping_class_invariants",
            {"matrix": "1 1 1 1"},
            "has determinant 0, not in SL(2,Z)",
        ),
        (
            "satellite__satellite_unit_ball",
            {
                "companion": "1 1 1",
                "strands": 2,
                "pattern": "1 1 1",
                "pattern_strands": 2,
                "twist": "1 2 0 1",
            },
            None,
        ),
        (
            "word-oracle__commutator_length_bound",
            {"word": "x y"},
            "not in the commutator subgroup",
        ),
    ],
)
async def test_tool_call_sets_is_error(mcp_server, tool_name, arguments, expected_substring):
    """Rejected computations must surface as CallToolResult with isError=true and the reason intact."""
    async with Client(mcp_server) as client:
        result = await client.call_tool(tool_name, arguments, raise_on_error=False)

    if expected_substring is None:
        # an unbounded unit ball is a regular answer, not an error
        assert result.is_error is False
        assert '"bounded": false' in result.content[0].text
        return
    assert result.is_error is True
    assert expected_substring in result.content[0].text
