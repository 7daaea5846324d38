"""Configuration module for slope-calc.

This module centralizes all environment variable handling and configuration
to make settings easily reusable across the toolsets, the MCP server and the CLI.
"""

import os

# Upper bound on the number of nodes the commutator-length search may visit
SLOPE_CALC_NODE_LIMIT = int(os.getenv("SLOPE_CALC_NODE_LIMIT", "2000000"))

# Default search budgets for cl_upper_bound when the caller gives none
SLOPE_CALC_CL_K_MAX = int(os.getenv("SLOPE_CALC_CL_K_MAX", "2"))
SLOPE_CALC_CL_LEN_MAX = int(os.getenv("SLOPE_CALC_CL_LEN_MAX", "3"))

# Slope range used by extendability reports when --range is omitted
SLOPE_CALC_DEFAULT_RANGE = int(os.getenv("SLOPE_CALC_DEFAULT_RANGE", "5"))

# Argument toolset for the MCP server
SLOPE_CALC_TOOLSET = os.getenv("SLOPE_CALC_TOOLSET") or "all"

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(filename)s:%(lineno)d - %(name)s - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"
