"""FastMCP base class for slope-calc toolsets.

Each mathematical module ships a toolset: a ``SlopeCalcMCP`` subclass whose methods
are registered as read-only, idempotent, closed-world tools. The unified server in
``slope_calc.server`` mounts the toolsets under their ``toolset_name``.
"""

from collections.abc import Callable
from typing import Any

from fastmcp import FastMCP
from fastmcp.tools import Tool
from mcp.types import ToolAnnotations


class SlopeCalcMCP(FastMCP):
    """MCP server class for one slope-calc toolset.

    Attributes:
        toolset_name: Name used for ``--toolset`` selection and as the tool namespace
    """

    def __init__(
        self,
        name: str,
        toolset_name: str,
        *,
        instructions: str | None = None,
    ):
        """Initialize the toolset server.

        Args:
            name: Name of the MCP server
            toolset_name: Name of the toolset being used
            instructions: Optional instructions for the MCP server
        """
        super().__init__(name=name, instructions=instructions)
        self.toolset_name = toolset_name

    def register_tools(self) -> None:
        """Register the tools for the MCP server.

        This method is implemented by each toolset.
        """
        raise NotImplementedError("MCP server does not implement register_tools()")

    def add_calculator_tools(self, tool_functions: list[Callable[..., Any]]) -> None:
        """Register pure calculator functions as read-only tools.

        The first docstring line becomes the tool title, the full docstring its description.
        """
        for f in tool_functions:
            tool = Tool.from_function(f)
            tool.annotations = ToolAnnotations(readOnlyHint=True, openWorldHint=False, idempotentHint=True)
            description_str = f.__doc__ or ""
            tool.description = description_str
            tool.title = description_str.split("\n", 1)[0]
            self.add_tool(tool)
