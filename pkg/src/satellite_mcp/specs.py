"""Braid tori and braid satellites as immutable input records."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from braid_mcp.braid import BraidWord, parse_braid, require_knot, winding_number
from braid_mcp.invariants import GenusEstimate, Nontriviality, is_nontrivial_knot, knot_genus
from mapping_class_mcp.sl2z import MappingClass, is_plumbing, parse_mapping_class
from slope_calc.errors import HypothesisError, InvalidInputError

logger = logging.getLogger("SatelliteSpecs")

NONTRIVIAL_KNOT = "nontrivial-knot"


@dataclass(frozen=True)
class BraidTorusSpec:
    """The standard braid torus of a braid whose closure is a knot.

    ``genus`` is computed from the braid unless the caller supplied an exact override.
    The override must lie in the computed genus interval; an override of at least 1
    also certifies the knot as nontrivial.
    """

    braid: BraidWord
    genus: GenusEstimate
    nontriviality: Nontriviality

    @classmethod
    def from_braid(cls, braid: BraidWord, genus: int | None = None) -> BraidTorusSpec:
        require_knot(braid)
        estimate = knot_genus(braid)
        if genus is None:
            return cls(braid, estimate, is_nontrivial_knot(braid))
        override = GenusEstimate.override(genus)
        if not estimate.lower <= genus <= estimate.upper:
            raise InvalidInputError(
                f"genus override {genus} contradicts the genus interval [{estimate.lower}, {estimate.upper}] "
                f"computed for '{braid}'"
            )
        if estimate.exact:
            return cls(braid, estimate, Nontriviality.NONTRIVIAL)
        logger.debug("genus of '%s' fixed to %d by override", braid, genus)
        return cls(braid, override, Nontriviality.NONTRIVIAL)

    @property
    def winding_number(self) -> int:
        return winding_number(self.braid)

    def require_nontrivial(self, operation: str) -> None:
        """Raise HypothesisError unless the associated knot is certified nontrivial."""
        if self.nontriviality == Nontriviality.TRIVIAL:
            raise HypothesisError(f"{operation} requires a nontrivial associated knot", NONTRIVIAL_KNOT)
        if self.nontriviality == Nontriviality.UNKNOWN:
            raise HypothesisError(
                f"{operation} requires a nontrivial associated knot; nontriviality of '{self.braid}' "
                "could not be certified (pass a genus override)",
                NONTRIVIAL_KNOT,
            )

    def genus_for_bounds(self) -> int:
        """Genus value that keeps every formula a valid lower bound.

        A certified nontrivial knot has genus at least 1, so the interval's lower end is raised to 1.
        """
        return max(self.genus.lower, 1)

    def to_dict(self) -> dict:
        return {
            "word": list(self.braid.letters),
            "strands": self.braid.strands,
            "genus": self.genus.to_dict(),
            "nontriviality": self.nontriviality.value,
        }


@dataclass(frozen=True)
class SatelliteSpec:
    """Satellite of the companion braid torus, twisted by ``twist``, with a braid pattern."""

    companion: BraidTorusSpec
    twist: MappingClass
    pattern: BraidTorusSpec

    @property
    def pattern_winding(self) -> int:
        return self.pattern.winding_number

    @property
    def is_plumbing(self) -> bool:
        return is_plumbing(self.twist)

    @property
    def genera_exact(self) -> bool:
        return self.companion.genus.exact and self.pattern.genus.exact

    def to_dict(self) -> dict:
        return {
            "companion": self.companion.to_dict(),
            "twist": [[self.twist.p, self.twist.q], [self.twist.r, self.twist.s]],
            "pattern": self.pattern.to_dict(),
            "pattern_winding": self.pattern_winding,
            "plumbing": self.is_plumbing,
        }


def satellite_spec(
    companion: BraidWord,
    twist: MappingClass,
    pattern: BraidWord,
    *,
    companion_genus: int | None = None,
    pattern_genus: int | None = None,
) -> SatelliteSpec:
    """Build a satellite record, computing both genus estimates unless overridden."""
    spec = SatelliteSpec(
        companion=BraidTorusSpec.from_braid(companion, companion_genus),
        twist=twist,
        pattern=BraidTorusSpec.from_braid(pattern, pattern_genus),
    )
    logger.debug(
        "satellite spec: companion genus %s, pattern genus %s, plumbing=%s",
        spec.companion.genus,
        spec.pattern.genus,
        spec.is_plumbing,
    )
    return spec


def parse_satellite_spec(
    companion: str,
    strands: int,
    pattern: str,
    pattern_strands: int,
    twist: str,
    *,
    companion_genus: int | None = None,
    pattern_genus: int | None = None,
) -> SatelliteSpec:
    """Build a satellite record from the text forms used by the CLI and the MCP tools."""
    return satellite_spec(
        parse_braid(companion, strands),
        parse_mapping_class(twist),
        parse_braid(pattern, pattern_strands),
        companion_genus=companion_genus,
        pattern_genus=pattern_genus,
    )
