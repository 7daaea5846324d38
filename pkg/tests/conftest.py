"""Pytest configuration and common fixtures."""

import asyncio
import functools
import io

import pytest
from fastmcp import Client

from slope_calc.cli import run
from slope_calc.server import build_server, parse_toolsets

FIGURE_EIGHT = ["--word", "1 -2 1 -2", "--strands", "3"]
TREFOIL_PLUMBING = [
    "--companion",
    "1 1 1",
    "--strands",
    "2",
    "--pattern",
    "1 1 1",
    "--pattern-strands",
    "2",
    "--twist",
    "0 -1 1 0",
]
TREFOIL_CINQUEFOIL_PLUMBING = [
    "--companion",
    "1 1 1",
    "--strands",
    "2",
    "--pattern",
    "1 1 1 1 1",
    "--pattern-strands",
    "2",
    "--twist",
    "0 -1 1 0",
]


@functools.cache
def _unified_server():
    return build_server(parse_toolsets("all"))


@pytest.fixture(scope="session")
def mcp_server():
    """The unified server with every toolset mounted; built once per process."""
    return _unified_server()


@pytest.fixture(scope="session")
def mcp_tools(mcp_server):  # pylint: disable=redefined-outer-name
    """Tools listed by an in-memory client of the unified server."""

    async def _fetch():
        async with Client(mcp_server) as client:
            return await client.list_tools()

    return asyncio.run(_fetch())


@pytest.fixture
def run_cli():
    """Run the batch CLI in-process; returns (exit status, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        stdout, stderr = io.StringIO(), io.StringIO()
        status = run(list(argv), stdout=stdout, stderr=stderr)
        return status, stdout.getvalue(), stderr.getvalue()

    return _run
