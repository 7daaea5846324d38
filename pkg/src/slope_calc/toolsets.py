"""Registered MCP toolsets mounted by SlopeCalcServer."""

from braid_mcp.server import mcp as BraidMCP
from extendability_mcp.server import mcp as ExtendabilityMCP
from mapping_class_mcp.server import mcp as MappingClassMCP
from satellite_mcp.server import mcp as SatelliteMCP
from slope_calc.mcp import SlopeCalcMCP
from word_oracle_mcp.server import mcp as WordOracleMCP

MCPS: list[SlopeCalcMCP] = [
    BraidMCP,
    MappingClassMCP,
    SatelliteMCP,
    ExtendabilityMCP,
    WordOracleMCP,
]
