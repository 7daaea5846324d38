"""Satellite invariants MCP toolset.

Seminorms of braid tori and braid satellites, unit balls and genus bounds of slopes.
"""

from __future__ import annotations

import logging
from typing import Annotated, Any, Callable

from pydantic import Field

from braid_mcp.braid import parse_braid
from mapping_class_mcp.sl2z import parse_slope
from satellite_mcp.norms import braid_torus_norm as _braid_torus_norm
from satellite_mcp.report import slope_report
from satellite_mcp.specs import BraidTorusSpec, SatelliteSpec, parse_satellite_spec
from satellite_mcp.unit_ball import unit_ball_payload
from slope_calc.mcp import SlopeCalcMCP
from tools.common import normalise_int, run_calculator_tool

CompanionParam = Annotated[str, Field(description="Companion braid word, e.g. '1 1 1' for the trefoil")]
StrandsParam = Annotated[int, Field(description="Strands of the companion braid", ge=1)]
PatternParam = Annotated[str, Field(description="Pattern braid word, e.g. '1 -2 1 -2' for the figure-eight")]
PatternStrandsParam = Annotated[int, Field(description="Strands of the pattern braid (its winding number)", ge=1)]
TwistParam = Annotated[
    str, Field(description="Twist mapping class 'p q r s'; '0 -1 1 0' is the plumbing twist")
]
GenusParam = Annotated[
    int | str | None,
    Field(description="Optional exact genus (positive integer inside the computed interval) replacing the estimate"),
]


class SatelliteMCP(SlopeCalcMCP):
    """MCP server for seminorms and genus bounds of braid satellites."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("SatelliteMCP")

        general_intro = """You evaluate closed-form seminorms on H_1(T^2) for knotted tori in S^4
        built from braids: braid tori and braid satellites K_b^tau . P_b'.

        Every value carries a kind. 'Exact' values are norms; 'LowerBound' values are only
        lower bounds and must never be described as the norm. Errors tagged in square
        brackets name the hypothesis that failed.
        """

        super().__init__(name="Satellite Invariants MCP Server", toolset_name="satellite", instructions=general_intro)

    def register_tools(self) -> None:
        """Register all available tools with the MCP server."""
        tool_functions: list[Callable[..., Any]] = [
            self.braid_torus_norm,
            self.satellite_slope_report,
            self.satellite_unit_ball,
        ]
        self.add_calculator_tools(tool_functions)

    def braid_torus_norm(
        self,
        word: Annotated[str, Field(description="Braid word whose closure is a nontrivial knot")],
        strands: StrandsParam,
        slopes: Annotated[list[str], Field(description="Slopes 'x/y' to evaluate, e.g. ['0/1', '7/3']")],
        genus: GenusParam = None,
    ) -> str:
        """Seminorm (2g-1)|y| of the standard braid torus at each slope.

        Returns:
            dict: torus {word, strands, genus, nontriviality}, rows [{slope, norm {value, kind}}].
        """

        def operation() -> dict[str, Any]:
            torus = BraidTorusSpec.from_braid(parse_braid(word, strands), normalise_int("genus", genus))
            rows = []
            for text in slopes:
                c = parse_slope(text)
                rows.append({"slope": [c.x, c.y], "norm": _braid_torus_norm(torus, c).to_dict()})
            return {"torus": torus.to_dict(), "rows": rows}

        return run_calculator_tool(operation, "braid torus norm", self.logger)

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def satellite_slope_report(
        self,
        companion: CompanionParam,
        strands: StrandsParam,
        pattern: PatternParam,
        pattern_strands: PatternStrandsParam,
        twist: TwistParam,
        slopes: Annotated[list[str], Field(description="Slopes 'x/y' to report on")],
        companion_genus: GenusParam = None,
        pattern_genus: GenusParam = None,
    ) -> str:
        """Norm (or Schubert lower bound), singular-genus bounds and genus upper bound per slope.

        Hypothesis failures are reported per field under 'errors' rather than failing the call.

        Returns:
            dict: satellite (spec summary), rows [{slope, norm, singular_genus, genus_upper, errors?}].
        """

        def operation() -> dict[str, Any]:
            spec = self.parse_spec(companion, strands, pattern, pattern_strands, twist, companion_genus, pattern_genus)
            rows = [slope_report(spec, parse_slope(text)).to_dict() for text in slopes]
            return {"satellite": spec.to_dict(), "rows": rows}

        return run_calculator_tool(operation, "satellite slope report", self.logger)

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def satellite_unit_ball(
        self,
        companion: CompanionParam,
        strands: StrandsParam,
        pattern: PatternParam,
        pattern_strands: PatternStrandsParam,
        twist: TwistParam,
        companion_genus: GenusParam = None,
        pattern_genus: GenusParam = None,
    ) -> str:
        """Unit-ball polygon of the satellite seminorm (Exact for plumbing, else OuterApproximation).

        An unbounded ball is reported as {bounded: false, null_direction: [x, y]}.

        Returns:
            dict: bounded, kind, vertices (rational strings, counterclockwise).
        """

        def operation() -> dict[str, Any]:
            spec = self.parse_spec(companion, strands, pattern, pattern_strands, twist, companion_genus, pattern_genus)
            return unit_ball_payload(spec)

        return run_calculator_tool(operation, "unit ball", self.logger)

    @staticmethod
    def parse_spec(  # pylint: disable=too-many-arguments,too-many-positional-arguments
        companion: str,
        strands: int,
        pattern: str,
        pattern_strands: int,
        twist: str,
        companion_genus: int | str | None,
        pattern_genus: int | str | None,
    ) -> SatelliteSpec:
        """Parse tool arguments into a satellite record, normalising the genus overrides."""
        return parse_satellite_spec(
            companion,
            strands,
            pattern,
            pattern_strands,
            twist,
            companion_genus=normalise_int("companion_genus", companion_genus),
            pattern_genus=normalise_int("pattern_genus", pattern_genus),
        )


mcp = SatelliteMCP()
