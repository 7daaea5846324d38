"""Test MCP tool validation for word-oracle tools."""

import json

import pytest
from fastmcp import Client

from tests.test_patterns import (  # pylint: disable=import-error
    assert_mcp_tool_descriptions_and_annotations,
)


def test_commutator_length_bound_schema(mcp_tools, subtests):
    assert_mcp_tool_descriptions_and_annotations(
        mcp_tools,
        subtests,
        "word-oracle__commutator_length_bound",
        "Upper bound on commutator length by bounded search",
        {
            "word": {"description": "Free-group word", "type": "string"},
            "k_max": {"description": "Largest number of commutators", "type": "integer"},
            "len_max": {"description": "Longest commutator entry", "type": "integer"},
        },
    )


@pytest.mark.asyncio
async def test_multiply_commutators_replays_search_witness(mcp_server):
    async with Client(mcp_server) as client:
        found = json.loads(
            (await client.call_tool("word-oracle__commutator_length_bound", {"word": "x x y X X Y"}))
            .content[0]
            .text
        )
        replay = json.loads(
            (await client.call_tool("word-oracle__multiply_commutators", {"pairs": found["witness_text"], "rank": 2}))
            .content[0]
            .text
        )

    assert found["bound"] == 1
    assert replay["letters"] == [1, 1, 2, -1, -1, -2]


@pytest.mark.asyncio
async def test_reduce_word(mcp_server):
    async with Client(mcp_server) as client:
        result = await client.call_tool("word-oracle__reduce_word", {"word": "x y Y X x"})

    payload = json.loads(result.content[0].text)
    assert payload["letters"] == [1]
    assert payload["abelianization"] == [1, 0]
