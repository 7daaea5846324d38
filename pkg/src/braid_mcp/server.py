"""Braid invariants MCP toolset.

Parses braid words and reports the closure's permutation, winding number,
Alexander polynomial, genus interval and nontriviality.
"""

from __future__ import annotations

import logging
from typing import Annotated, Any, Callable

from pydantic import Field

from braid_mcp.braid import parse_braid, require_knot
from braid_mcp.braid import torus_braid as _torus_braid
from braid_mcp.invariants import braid_report, knot_genus
from braid_mcp.seifert import seifert_alexander
from braid_mcp.seifert import seifert_matrix as _seifert_matrix
from slope_calc.mcp import SlopeCalcMCP
from tools.common import run_calculator_tool

WordParam = Annotated[
    str,
    Field(description="Braid word as space-separated nonzero integers, e.g. '1 -2 1 -2' (i means sigma_i)"),
]
StrandsParam = Annotated[int, Field(description="Number of strands n (n >= 1)", ge=1)]


class BraidMCP(SlopeCalcMCP):
    """MCP server for classical-knot invariants of braid closures."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("BraidMCP")

        general_intro = """You are a knot-theory calculator for braid closures.

        Every answer is exact. Genus values come as an interval [lower, upper] with an
        'exact' flag; never present an inexact interval as the genus.

        Call braid_invariants first for any question about a specific braid word.
        """

        super().__init__(name="Braid Invariants MCP Server", toolset_name="braid", instructions=general_intro)

    def register_tools(self) -> None:
        """Register all available tools with the MCP server."""
        tool_functions: list[Callable[..., Any]] = [
            self.braid_invariants,
            self.braid_seifert_matrix,
            self.torus_knot_braid,
        ]
        self.add_calculator_tools(tool_functions)

    def braid_invariants(self, word: WordParam, strands: StrandsParam) -> str:
        """Compute permutation, winding number, Alexander polynomial and genus of a braid closure.

        The closure must be a knot. Genus is certified exact for homogeneous words
        or when the Alexander-span lower bound meets the Seifert-algorithm upper bound.

        Returns:
            dict: word, strands, permutation (cycles), winding_number, alexander,
                  genus {lower, upper, exact, method}, nontriviality.
        """
        return run_calculator_tool(
            lambda: braid_report(parse_braid(word, strands)).to_dict(), "braid invariants", self.logger
        )

    def braid_seifert_matrix(self, word: WordParam, strands: StrandsParam) -> str:
        """Seifert matrix of the Seifert-algorithm surface of a braid closure.

        Returns:
            dict: matrix (list of integer rows), size, alexander (from det(V - tV^T)).
        """

        def operation() -> dict[str, Any]:
            braid = parse_braid(word, strands)
            require_knot(braid)
            matrix = _seifert_matrix(braid)
            return {"matrix": matrix, "size": len(matrix), "alexander": str(seifert_alexander(braid))}

        return run_calculator_tool(operation, "Seifert matrix", self.logger)

    def torus_knot_braid(
        self,
        p: Annotated[int, Field(description="Number of strands of the torus braid", ge=1)],
        q: Annotated[int, Field(description="Full-cycle power; gcd(p, q) must be 1 for a knot")],
    ) -> str:
        """Standard braid (sigma_1 ... sigma_{p-1})^q of the torus knot T(p, q) with its genus.

        Returns:
            dict: word, strands, genus {lower, upper, exact, method}.
        """

        def operation() -> dict[str, Any]:
            braid = _torus_braid(p, q)
            return {"word": list(braid.letters), "strands": braid.strands, "genus": knot_genus(braid).to_dict()}

        return run_calculator_tool(operation, "torus knot braid", self.logger)


mcp = BraidMCP()
