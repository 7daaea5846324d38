"""Shared exception types for slope-calc.

Every error derives from ``SlopeCalcError``, which subclasses FastMCP's ``ToolError``
so a failure inside an MCP tool surfaces as ``isError: true`` with the message intact.
The batch CLI maps the same hierarchy to exit codes.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from fastmcp.exceptions import ToolError

if TYPE_CHECKING:
    from mapping_class_mcp.sl2z import Slope


class SlopeCalcError(ToolError):
    """Base class for all slope-calc failures."""


class ParseError(SlopeCalcError):
    """Raised when braid, slope, matrix or group-word text cannot be parsed."""


class InvalidInputError(SlopeCalcError):
    """Raised for well-formed input outside an operation's domain."""


class NotAKnotError(SlopeCalcError):
    """Raised when a braid closes to a link with more than one component."""

    def __init__(self, components: int):
        super().__init__(f"braid closure has {components} components; a knot (one component) is required")
        self.components = components


class HypothesisError(SlopeCalcError):
    """Raised when a mathematical precondition of a formula does not hold.

    ``citation`` is the tag of the violated hypothesis and ``reference`` the criterion it
    belongs to; both are part of the message.
    """

    def __init__(self, message: str, citation: str):
        self.citation = citation
        self.reference = criterion(citation)
        super().__init__(f"[{citation}] {message} (criterion: {self.reference})")


class InexactGenusError(HypothesisError):
    """Raised when an exact formula is asked for while a genus is only known as an interval."""

    def __init__(self, message: str):
        super().__init__(message, "exact-genus")


class NotPlumbingError(HypothesisError):
    """Raised when an exact-norm formula is evaluated on a non-plumbing twist."""

    def __init__(self, message: str):
        super().__init__(message, "plumbing-twist")


class DegenerateNormError(SlopeCalcError):
    """Raised when a lower-bound norm vanishes on a line, so its unit ball is unbounded."""

    def __init__(self, null_direction: Slope):
        super().__init__(
            f"norm vanishes along the slope {null_direction.x}/{null_direction.y}; the unit ball is unbounded"
        )
        self.null_direction = null_direction


class NotInCommutatorSubgroupError(SlopeCalcError):
    """Raised when a group word has nonzero abelianization."""


class SearchBudgetError(SlopeCalcError):
    """Raised when the commutator-length search exceeds its node limit."""

    def __init__(self, node_limit: int):
        super().__init__(f"commutator search exceeded the node limit of {node_limit} (SLOPE_CALC_NODE_LIMIT)")
        self.node_limit = node_limit


class InternalInvariantError(SlopeCalcError):
    """Raised when an internal consistency check fails; indicates a bug, not bad input."""


# Criterion behind each citation tag, reported next to verdicts and hypothesis failures.
CRITERIA: dict[str, str] = {
    "nontrivial-knot": "the braid torus and satellite norm formulas hold when every associated knot is nontrivial",
    "exact-genus": "exact norm values need the exact genus of both braid closures",
    "plumbing-twist": "the satellite norm equals the Schubert bound when the twist is the plumbing map",
    "positive-norm": "the singular genus of a slope is at least (norm + 1)/2 when the norm is positive",
    "value-set-index": "stably extendable maps preserve slope invariants, so distinct values lie in distinct cosets",
    "nondegenerate-norm": "an invariant norm with a bounded unit ball is preserved by finitely many automorphisms",
    "twist-moves-xi": "a satellite twist that moves xi off ±xi leaves a finite stable extendable subgroup",
    "null-singular-genus-twist": "the Dehn twist along a slope of singular genus 0 is stably extendable",
    "unknotted-torus": "extendable and stable extendable subgroups of the unknotted torus are known",
}


def criterion(tag: str) -> str:
    """The criterion a citation tag stands for."""
    try:
        return CRITERIA[tag]
    except KeyError:
        raise InternalInvariantError(f"unknown citation tag '{tag}'") from None
