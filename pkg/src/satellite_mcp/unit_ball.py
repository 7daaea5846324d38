"""Unit ball of the satellite seminorm (or of its Schubert lower bound) as a polygon."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from mapping_class_mcp.sl2z import XI, HomologyClass
from satellite_mcp.norms import schubert_lower_bound
from satellite_mcp.specs import SatelliteSpec
from slope_calc.errors import DegenerateNormError, InternalInvariantError

Vertex = tuple[Fraction, Fraction]


class BallKind(str, Enum):
    EXACT = "Exact"
    OUTER_APPROXIMATION = "OuterApproximation"


@dataclass(frozen=True)
class UnitBall:
    """Convex polygon, vertices counterclockwise starting on the positive x-axis."""

    vertices: tuple[Vertex, ...]
    kind: BallKind

    def to_dict(self) -> dict:
        return {
            "bounded": True,
            "kind": self.kind.value,
            "vertices": [[str(x), str(y)] for x, y in self.vertices],
        }


def unit_ball_polygon(spec: SatelliteSpec) -> UnitBall:
    """Vertices of {gamma : L(gamma) <= 1} for L = (2g' - 1)|y| + (2g - 1)|r x + s w' y|.

    The ball is a parallelogram with vertices ±(1/((2g - 1)|r|), 0) and
    ±(-s w', r)/((2g' - 1)|r|); for the plumbing twist it is the rhombus with vertices
    (±1/(2g - 1), 0), (0, ±1/(2g' - 1)) and L is the norm itself. When r = 0 the bound
    vanishes along xi and the ball is unbounded.
    """
    r, s = spec.twist.r, spec.twist.s
    g = spec.companion.genus_for_bounds()
    g_pattern = spec.pattern.genus_for_bounds()
    spec.companion.require_nontrivial("unit ball")
    spec.pattern.require_nontrivial("unit ball")
    if r == 0:
        raise DegenerateNormError(null_direction=XI)

    on_axis = Fraction(1, (2 * g - 1) * abs(r))
    scale = Fraction(1, (2 * g_pattern - 1) * abs(r))
    sign = 1 if r > 0 else -1
    # the vertex where the companion term vanishes, chosen in the upper half plane
    upper: Vertex = (-sign * s * spec.pattern_winding * scale, abs(r) * scale)
    vertices = (
        (on_axis, Fraction(0)),
        upper,
        (-on_axis, Fraction(0)),
        (-upper[0], -upper[1]),
    )

    exact = spec.is_plumbing and spec.genera_exact
    for x, y in vertices:
        value = schubert_lower_bound(spec, HomologyClass(x, y)).value
        if value != 1:
            raise InternalInvariantError(f"unit ball vertex ({x}, {y}) has norm {value}")
    return UnitBall(vertices, BallKind.EXACT if exact else BallKind.OUTER_APPROXIMATION)


def unit_ball_payload(spec: SatelliteSpec) -> dict:
    """JSON form of the unit ball; an unbounded ball reports its null direction instead."""
    try:
        return unit_ball_polygon(spec).to_dict()
    except DegenerateNormError as exc:
        return {"bounded": False, "null_direction": [exc.null_direction.x, exc.null_direction.y]}
