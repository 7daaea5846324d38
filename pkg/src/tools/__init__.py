"""Helpers shared by the slope-calc MCP toolsets and the batch CLI."""
