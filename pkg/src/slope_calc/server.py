"""Unified slope-calc MCP server that mounts the calculator toolsets."""

import argparse
import asyncio
import logging
import sys
from typing import Any

from fastmcp import FastMCP
from fastmcp.server.providers.fastmcp_provider import FastMCPProvider
from fastmcp.server.transforms.namespace import Namespace

from slope_calc import __version__, config
from slope_calc.toolsets import MCPS


class SlopeCalcServer(FastMCP):
    """MCP server that mounts the slope-calc toolsets under their toolset names.

    Args:
        name: Name of the MCP server
        instructions: Optional instructions for the server
    """

    def __init__(self, name: str | None = None, instructions: str | None = None):
        super().__init__(
            name=name or "slope-calc",
            instructions=instructions,
            version=__version__ if __version__ else "0.0.0-dev",
        )

    def add_provider(self, provider: Any, *, namespace: str = "") -> None:
        """Mount providers with their tools namespaced by toolset."""
        if isinstance(provider, FastMCP):
            provider = FastMCPProvider(provider)

        if namespace:
            provider = provider.wrap_transform(Namespace(namespace))
            namespace = ""

        super().add_provider(provider, namespace=namespace)

    def register_mcps(self, allowed_mcps: list[str]) -> None:
        """Register and mount allowed toolsets.

        Args:
            allowed_mcps: List of toolset names to register and mount
        """
        for mcp in MCPS:
            if mcp.toolset_name not in allowed_mcps:
                continue
            mcp.register_tools()
            self.add_provider(mcp, namespace=f"{mcp.toolset_name}_")


def parse_toolsets(toolset: str | None) -> list[str]:
    """Resolve a comma-separated toolset argument (or ``all``) to toolset names."""
    toolset = toolset or config.SLOPE_CALC_TOOLSET
    available = [mcp.toolset_name for mcp in MCPS]
    if toolset == "all":
        return available
    toolset_list = [t.strip() for t in toolset.split(",") if t.strip()]
    unknown = [t for t in toolset_list if t not in available]
    if unknown:
        raise ValueError(f"Unknown toolset(s): {', '.join(unknown)}. Available toolsets: all, {', '.join(available)}")
    return toolset_list


def get_instructions(allowed_mcps: list[str]) -> str:
    """Concatenate the instructions of the allowed toolsets."""
    instructions_parts = []
    for mcp in MCPS:
        if mcp.toolset_name not in allowed_mcps:
            continue
        if mcp.instructions:
            instructions_parts.append(f"## {mcp.name}\n\n{mcp.instructions}")
    return "\n\n".join(instructions_parts)


def build_server(allowed_mcps: list[str]) -> SlopeCalcServer:
    """Create the unified server with the given toolsets mounted."""
    server = SlopeCalcServer(instructions=get_instructions(allowed_mcps))
    server.register_mcps(allowed_mcps)
    return server


def print_toolset_help_and_exit(args: argparse.Namespace):
    """Print toolset help and exit."""
    if not args.toolset_help:
        return
    print("# All available toolsets")
    print()
    print("Every tool is read-only and exact; results are JSON with rationals as 'p/q' strings.")
    for mcp in MCPS:
        print(f"\n## {mcp.toolset_name}")
        mcp.register_tools()
        tools = asyncio.run(mcp.list_tools())
        if not tools:
            print("  No tools available")
            continue
        for tool in sorted(tools, key=lambda t: t.name):
            title = (tool.title or (tool.description or "").split("\n")[0]).strip()
            display_text = f"`{tool.name}`: {title}" if title else f"`{tool.name}`"
            if len(display_text) > 120:
                last_space = display_text.rfind(" ", 100, 119)
                display_text = display_text[: last_space if last_space != -1 else 119] + "…"
            print(f"- {display_text}")
    sys.exit(0)


def main():
    """Main entry point for the slope-calc MCP server."""
    available_toolsets = f"all, {', '.join(mcp.toolset_name for mcp in MCPS)}"
    toolset_help = f"Comma-separated list of toolsets to use. Available toolsets: {available_toolsets} (default: all)"

    parser = argparse.ArgumentParser(prog="slope-calc-mcp", description="slope-calc MCP server.")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--toolset", type=str, help=toolset_help)
    parser.add_argument("--toolset-help", action="store_true", help="Show toolset details of all toolsets")

    # ==== Start of Transport Mode Subparsers ====
    subparsers = parser.add_subparsers(dest="transport", help="Transport mode")
    subparsers.add_parser("stdio", help="Use stdio transport (default)")

    sse_parser = subparsers.add_parser("sse", help="Use SSE transport")
    sse_parser.add_argument("--host", default="127.0.0.1", help="Host for SSE transport (default: 127.0.0.1)")
    sse_parser.add_argument("--port", type=int, default=9000, help="Port for SSE transport (default: 9000)")

    http_parser = subparsers.add_parser("http", help="Use HTTP streaming transport")
    http_parser.add_argument("--host", default="127.0.0.1", help="Host for HTTP transport (default: 127.0.0.1)")
    http_parser.add_argument("--port", type=int, default=8000, help="Port for HTTP transport (default: 8000)")
    # ==== End of Transport Mode Subparsers ====

    args = parser.parse_args()

    print_toolset_help_and_exit(args)

    if args.transport is None:
        args.transport = "stdio"

    # ==== Start of Logging Configuration ====
    logger = logging.getLogger("SlopeCalcServer")
    log_level = logging.DEBUG if args.debug else logging.INFO
    logging.basicConfig(
        level=log_level, format=config.LOG_FORMAT, datefmt=config.LOG_DATEFMT, handlers=[logging.StreamHandler()]
    )
    logger.setLevel(log_level)

    if args.debug:
        logging.getLogger("docket.worker").setLevel(logging.INFO)
        logger.info("Debug mode enabled")
    else:
        logging.getLogger("docket.worker").setLevel(logging.WARNING)
        logging.getLogger("mcp.server.lowlevel.server").setLevel(logging.WARNING)
        logging.getLogger("mcp.server.streamable_http_manager").setLevel(logging.WARNING)
    # ==== End of Logging Configuration ====

    try:
        toolset_list = parse_toolsets(args.toolset)
    except ValueError as exc:
        parser.error(str(exc))

    logger.info(
        "Starting slope-calc MCP %s (%s) with toolsets: %s", __version__, args.transport, ", ".join(toolset_list)
    )
    mcp_server = build_server(toolset_list)

    if args.transport == "sse":
        mcp_server.run(transport="sse", host=args.host, port=args.port)
    elif args.transport == "http":
        logger.info("Running HTTP transport on host: %s, port: %s", args.host, args.port)
        mcp_server.run(
            transport="http", host=args.host, port=args.port, log_level="DEBUG" if args.debug else "WARNING"
        )
    else:
        mcp_server.run()


if __name__ == "__main__":
    main()
