"""Mapping class MCP toolset: SL(2, Z) on the homology of the torus."""

from __future__ import annotations

import logging
from typing import Annotated, Any, Callable

from pydantic import Field

from mapping_class_mcp.sl2z import (
    ETA,
    XI,
    MappingClass,
    act_on_slope,
    dehn_twist,
    fixes_xi_up_to_sign,
    intersection_form,
    is_plumbing,
    parse_mapping_class,
    parse_slope,
    torsion_order,
)
from slope_calc.mcp import SlopeCalcMCP
from tools.common import run_calculator_tool

MatrixParam = Annotated[str, Field(description="Mapping class as four integers 'p q r s' (row-major, ps - qr = 1)")]
SlopeParam = Annotated[str, Field(description="Slope as 'x/y' with gcd(x, y) = 1, e.g. '2/-3'")]


def mapping_class_summary(tau: MappingClass) -> dict[str, Any]:
    """Invariants of a mapping class shared by the MCP tool and the CLI."""
    return {
        "matrix": [[tau.p, tau.q], [tau.r, tau.s]],
        "trace": tau.trace,
        "torsion_order": torsion_order(tau),
        "fixes_xi_up_to_sign": fixes_xi_up_to_sign(tau),
        "is_plumbing": is_plumbing(tau),
        "inverse": [[tau.inverse().p, tau.inverse().q], [tau.inverse().r, tau.inverse().s]],
        "image_of_xi": str(act_on_slope(tau, XI)),
        "image_of_eta": str(act_on_slope(tau, ETA)),
    }


class MappingClassMCP(SlopeCalcMCP):
    """MCP server for torus mapping classes and slopes."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("MappingClassMCP")

        general_intro = """You compute with mapping classes of the torus, written as integer
        matrices [[p, q], [r, s]] of determinant 1 acting on slopes x*xi + y*eta.

        Slopes are unoriented; answers always use the representative with x > 0, or 0/1.
        """

        super().__init__(
            name="Mapping Class MCP Server", toolset_name="mapping-class", instructions=general_intro
        )

    def register_tools(self) -> None:
        """Register all available tools with the MCP server."""
        tool_functions: list[Callable[..., Any]] = [
            self.mapping_class_invariants,
            self.dehn_twist_matrix,
            self.apply_mapping_class,
        ]
        self.add_calculator_tools(tool_functions)

    def mapping_class_invariants(self, matrix: MatrixParam) -> str:
        """Trace, torsion order, plumbing test and the images of xi and eta for a mapping class.

        Returns:
            dict: matrix, trace, torsion_order (null when infinite), fixes_xi_up_to_sign,
                  is_plumbing, inverse, image_of_xi, image_of_eta.
        """
        return run_calculator_tool(
            lambda: mapping_class_summary(parse_mapping_class(matrix)), "mapping class invariants", self.logger
        )

    def dehn_twist_matrix(self, slope: SlopeParam) -> str:
        """Matrix of the Dehn twist along a slope c, sending a to a + I(c, a) c.

        Returns:
            dict: slope, matrix.
        """

        def operation() -> dict[str, Any]:
            c = parse_slope(slope)
            twist = dehn_twist(c)
            return {"slope": str(c), "matrix": [[twist.p, twist.q], [twist.r, twist.s]]}

        return run_calculator_tool(operation, "Dehn twist", self.logger)

    def apply_mapping_class(self, matrix: MatrixParam, slope: SlopeParam) -> str:
        """Image of a slope under a mapping class, and its intersection number with the original.

        Returns:
            dict: slope, image, intersection (I(slope, image)).
        """

        def operation() -> dict[str, Any]:
            tau = parse_mapping_class(matrix)
            c = parse_slope(slope)
            image = act_on_slope(tau, c)
            return {
                "slope": str(c),
                "image": str(image),
                "intersection": intersection_form(c.as_class(), image.as_class()),
            }

        return run_calculator_tool(operation, "mapping class action", self.logger)


mcp = MappingClassMCP()
