"""
Conftest for satellite_mcp tests - shared braid tori and satellites.
"""

import pytest

from braid_mcp.braid import BraidWord
from mapping_class_mcp.sl2z import PLUMBING, MappingClass
from satellite_mcp.specs import SatelliteSpec, satellite_spec

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
CINQUEFOIL = BraidWord(2, (1, 1, 1, 1, 1))
THREE_FOLD = BraidWord(2, (1,) * 7)  # torus knot T(2, 7), genus 3
# closes to the trefoil, but the word only certifies genus in [1, 2]
LOOSE_TREFOIL = BraidWord(2, (1, 1, 1, -1, 1))
SHEAR = MappingClass(1, 0, 1, 1)


@pytest.fixture
def trefoil_plumbing() -> SatelliteSpec:
    """Plumbing satellite with g = g' = 1 (trefoil companion, figure-eight pattern)."""
    return satellite_spec(TREFOIL, PLUMBING, FIGURE_EIGHT)


@pytest.fixture
def sheared_trefoils() -> SatelliteSpec:
    """Trefoil pattern (w' = 2) on a trefoil companion, twisted by [[1,0],[1,1]]."""
    return satellite_spec(TREFOIL, SHEAR, TREFOIL)


@pytest.fixture
def untwisted_trefoils() -> SatelliteSpec:
    """Identity twist: r = 0, so the lower bound vanishes along xi."""
    return satellite_spec(TREFOIL, MappingClass.identity(), TREFOIL)
