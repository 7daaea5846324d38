"""
Conftest for extendability_mcp tests - reuses the satellite fixtures.
"""

from satellite_mcp.tests.conftest import (  # pylint: disable=import-error
    sheared_trefoils,
    trefoil_plumbing,
    untwisted_trefoils,
)

# Make the fixtures available for import
__all__ = [
    "sheared_trefoils",
    "trefoil_plumbing",
    "untwisted_trefoils",
]
