"""Tests for singular-genus bounds and the genus upper bound."""

import math

import pytest

from mapping_class_mcp.sl2z import PLUMBING, XI, Slope
from satellite_mcp.genus_bounds import GenusBounds, genus_upper_bound, odd_slope_parity, singular_genus_bounds
from satellite_mcp.norms import plumbing_norm
from satellite_mcp.specs import satellite_spec
from satellite_mcp.tests.conftest import CINQUEFOIL, FIGURE_EIGHT, LOOSE_TREFOIL, THREE_FOLD, TREFOIL
from slope_calc.errors import HypothesisError, InexactGenusError, InternalInvariantError, NotPlumbingError


@pytest.mark.parametrize(
    ("companion", "pattern", "slope", "expected"),
    (
        (TREFOIL, FIGURE_EIGHT, Slope(1, 1), GenusBounds(2, 2, 2, 2)),
        (TREFOIL, FIGURE_EIGHT, Slope(2, 1), GenusBounds(2, 3, None, 3)),
        (CINQUEFOIL, FIGURE_EIGHT, Slope(1, 1), GenusBounds(3, 3, 3, 3)),
        (TREFOIL, CINQUEFOIL, Slope(3, 2), GenusBounds(5, 6, None, 8)),
    ),
)
def test_plumbing_singular_genus_bounds(companion, pattern, slope, expected):
    assert singular_genus_bounds(satellite_spec(companion, PLUMBING, pattern), slope) == expected


def test_one_sided_bound_for_non_plumbing(sheared_trefoils):
    assert singular_genus_bounds(sheared_trefoils, Slope(0, 1)) == GenusBounds(2)


def test_one_sided_bound_for_inexact_plumbing():
    """N = 2 on (1, 1) is only a lower bound, so only g* >= 2 survives."""
    spec = satellite_spec(LOOSE_TREFOIL, PLUMBING, TREFOIL)
    assert singular_genus_bounds(spec, Slope(1, 1)) == GenusBounds(2)


def test_vanishing_bound_has_no_singular_genus(untwisted_trefoils):
    with pytest.raises(HypothesisError, match=r"^\[positive-norm\]"):
        singular_genus_bounds(untwisted_trefoils, XI)


@pytest.mark.parametrize(
    ("companion", "pattern", "slope", "genus"),
    (
        (TREFOIL, FIGURE_EIGHT, Slope(1, 1), 2),
        (TREFOIL, FIGURE_EIGHT, Slope(2, 1), 3),
        (TREFOIL, CINQUEFOIL, Slope(3, 2), 8),
        (TREFOIL, CINQUEFOIL, Slope(1, 0), 1),
        (TREFOIL, CINQUEFOIL, Slope(0, 1), 2),
    ),
)
def test_genus_upper_bound(companion, pattern, slope, genus):
    assert genus_upper_bound(satellite_spec(companion, PLUMBING, pattern), slope) == genus


def test_genus_upper_bound_hypotheses(sheared_trefoils):
    with pytest.raises(NotPlumbingError):
        genus_upper_bound(sheared_trefoils, Slope(1, 1))
    with pytest.raises(InexactGenusError):
        genus_upper_bound(satellite_spec(LOOSE_TREFOIL, PLUMBING, TREFOIL), Slope(1, 1))


def test_bounds_are_coherent(subtests):
    """Two-sided bounds differ by at most one and never exceed the genus upper bound from below.

    Odd-odd slopes have even norm N and singular genus exactly N/2 + 1.
    """
    for companion, pattern in (
        (TREFOIL, FIGURE_EIGHT),
        (CINQUEFOIL, TREFOIL),
        (FIGURE_EIGHT, CINQUEFOIL),
        (TREFOIL, THREE_FOLD),
    ):
        spec = satellite_spec(companion, PLUMBING, pattern)
        for x in range(0, 16):
            for y in range(-15, 16):
                if math.gcd(x, y) != 1:
                    continue
                slope = Slope.of(x, y)
                with subtests.test(companion=str(companion), slope=str(slope)):
                    bounds = singular_genus_bounds(spec, slope)
                    assert bounds.singular_upper - bounds.singular_lower in (0, 1)
                    if bounds.singular_exact is not None:
                        assert slope.x % 2 == 1 and slope.y % 2 == 1
                    assert isinstance(bounds.genus_upper, int)
                    assert bounds.genus_upper >= bounds.singular_lower
                    if slope.x % 2 == 1 and slope.y % 2 == 1:
                        norm = plumbing_norm(spec, slope.as_class()).value
                        assert norm % 2 == 0
                        assert bounds.singular_exact == norm / 2 + 1


def test_odd_slope_parity(trefoil_plumbing, sheared_trefoils):
    assert odd_slope_parity(trefoil_plumbing, Slope(3, -5))
    assert not odd_slope_parity(trefoil_plumbing, Slope(2, 1))
    assert not odd_slope_parity(sheared_trefoils, Slope(1, 1))


def test_genus_bounds_validation():
    with pytest.raises(InternalInvariantError):
        GenusBounds(3, 2)
    with pytest.raises(InternalInvariantError):
        GenusBounds(2, 3, 4)
