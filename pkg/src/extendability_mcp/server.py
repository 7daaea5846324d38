"""Extendability MCP toolset: certificates about extendable subgroups of Mod(T^2)."""

from __future__ import annotations

import logging
from typing import Annotated, Any, Callable

from pydantic import Field

from extendability_mcp.verdicts import (
    SlopeInvariant,
    dehn_twist_stably_extendable,
    extendability_report,
    index_lower_bound,
    slope_value_table,
    unknotted_torus_facts,
)
from mapping_class_mcp.sl2z import parse_slope
from satellite_mcp.server import (
    CompanionParam,
    GenusParam,
    PatternParam,
    PatternStrandsParam,
    SatelliteMCP,
    StrandsParam,
    TwistParam,
)
from slope_calc.config import SLOPE_CALC_DEFAULT_RANGE
from slope_calc.mcp import SlopeCalcMCP
from tools.common import run_calculator_tool

RangeParam = Annotated[
    int, Field(description="Slope range N: all primitive slopes with max(|x|, |y|) <= N", ge=1)
]


class ExtendabilityMCP(SlopeCalcMCP):
    """MCP server for extendability verdicts of braid satellites."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("ExtendabilityMCP")

        general_intro = """You report which automorphisms of T^2 can extend over S^4 for a
        knotted torus, as certified verdicts: Finite, InfiniteIndex, IndexAtLeast(k),
        StablyExtendable or NoConclusion. Each verdict carries the tag of the criterion
        that produced it. A verdict is one-directional; never turn NoConclusion into a negative claim.
        """

        super().__init__(name="Extendability MCP Server", toolset_name="extendability", instructions=general_intro)

    def register_tools(self) -> None:
        """Register all available tools with the MCP server."""
        tool_functions: list[Callable[..., Any]] = [
            self.satellite_extendability,
            self.index_lower_bound,
            self.dehn_twist_extendability,
            self.unknotted_torus,
        ]
        self.add_calculator_tools(tool_functions)

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def satellite_extendability(
        self,
        companion: CompanionParam,
        strands: StrandsParam,
        pattern: PatternParam,
        pattern_strands: PatternStrandsParam,
        twist: TwistParam,
        slope_range: RangeParam = SLOPE_CALC_DEFAULT_RANGE,
        companion_genus: GenusParam = None,
        pattern_genus: GenusParam = None,
    ) -> str:
        """Every extendability verdict available for a braid satellite.

        Criteria whose hypotheses fail are listed under 'errors' with the failed hypothesis tag.

        Returns:
            dict: verdicts [{subject, conclusion, index?, justification {tag, reference, parameters}}], errors?.
        """

        def operation() -> dict[str, Any]:
            spec = SatelliteMCP.parse_spec(
                companion, strands, pattern, pattern_strands, twist, companion_genus, pattern_genus
            )
            return extendability_report(spec, slope_range).to_dict()

        return run_calculator_tool(operation, "satellite extendability", self.logger)

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def index_lower_bound(
        self,
        companion: CompanionParam,
        strands: StrandsParam,
        pattern: PatternParam,
        pattern_strands: PatternStrandsParam,
        slope_range: RangeParam,
        invariant: Annotated[
            SlopeInvariant, Field(description="Invariant whose value set bounds the index")
        ] = SlopeInvariant.NORM,
        companion_genus: GenusParam = None,
        pattern_genus: GenusParam = None,
    ) -> str:
        """Index lower bound of the stable extendable subgroup of a plumbing braid satellite.

        Counts distinct exact norm (or exact singular genus) values over the slope range.

        Returns:
            dict: verdict {subject, conclusion: IndexAtLeast, index, justification}.
        """

        def operation() -> dict[str, Any]:
            spec = SatelliteMCP.parse_spec(
                companion, strands, pattern, pattern_strands, "0 -1 1 0", companion_genus, pattern_genus
            )
            return index_lower_bound(slope_value_table(spec, slope_range, invariant)).to_dict()

        return run_calculator_tool(operation, "index lower bound", self.logger)

    def dehn_twist_extendability(
        self,
        slope: Annotated[str, Field(description="Slope c = 'x/y' of the Dehn twist")],
        singular_genus: Annotated[int, Field(description="Certified singular genus of c (nonnegative)")],
    ) -> str:
        """Whether the Dehn twist along a slope is stably extendable, from its singular genus.

        Returns:
            dict: verdict {subject, conclusion: StablyExtendable or NoConclusion, justification}.
        """
        return run_calculator_tool(
            lambda: dehn_twist_stably_extendable(parse_slope(slope), singular_genus).to_dict(),
            "Dehn twist extendability",
            self.logger,
        )

    def unknotted_torus(self) -> str:
        """Known extendable subgroups of the unknotted torus: stable is all of Mod(T^2), index 3 otherwise.

        Returns:
            dict: stable_extendable, extendable_index, extendable_index_floor, stable_contains_extendable, tag.
        """
        return run_calculator_tool(lambda: unknotted_torus_facts().to_dict(), "unknotted torus facts", self.logger)


mcp = ExtendabilityMCP()
