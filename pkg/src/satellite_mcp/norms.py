"""Closed-form seminorms on H_1(T^2) for braid tori and braid satellites.

Values are exact rationals. A value is labelled Exact only when every hypothesis of
its formula holds with exact genera; otherwise it is a LowerBound and must never be
presented as the norm itself.

The seminorm is the stabilised complexity per multiplicity of representing surfaces.
It is never rescaled to the stable commutator length convention, which differs by a factor 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from mapping_class_mcp.sl2z import HomologyClass, MappingClass, Slope
from satellite_mcp.specs import BraidTorusSpec, SatelliteSpec
from slope_calc.errors import InexactGenusError, InvalidInputError, NotPlumbingError

logger = logging.getLogger("SatelliteNorms")

Point = HomologyClass | Slope


class NormKind(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"


@dataclass(frozen=True)
class SeminormValue:
    """A nonnegative rational value of a seminorm, or a lower bound for it."""

    value: Fraction
    kind: NormKind

    def __post_init__(self) -> None:
        if self.value < 0:
            raise InvalidInputError(f"seminorm value must be nonnegative, got {self.value}")

    def to_dict(self) -> dict:
        return {"value": str(self.value), "kind": self.kind.value}

    @classmethod
    def from_dict(cls, data: dict) -> SeminormValue:
        return cls(Fraction(data["value"]), NormKind(data["kind"]))


def _class(gamma: Point) -> HomologyClass:
    return HomologyClass(gamma.x, gamma.y)


def pattern_pushforward(gamma: Point, pattern_winding: int) -> HomologyClass:
    """Push a class into the companion torus: (x, y) -> (x, w' y)."""
    return HomologyClass(gamma.x, pattern_winding * gamma.y)


def _genus_term(torus: BraidTorusSpec) -> tuple[Fraction, bool]:
    """(2g - 1) and whether it is exact."""
    genus = torus.genus_for_bounds()
    if not torus.genus.exact:
        logger.debug("genus of '%s' is an interval; evaluating with g = %d", torus.braid, genus)
    return Fraction(2 * genus - 1), torus.genus.exact


def braid_torus_norm(torus: BraidTorusSpec, gamma: Point) -> SeminormValue:
    """Seminorm (2g - 1)|y| of the standard braid torus; it vanishes on xi."""
    torus.require_nontrivial("braid torus norm")
    factor, exact = _genus_term(torus)
    return SeminormValue(factor * abs(Fraction(gamma.y)), NormKind.EXACT if exact else NormKind.LOWER_BOUND)


def twisted_braid_torus_norm(torus: BraidTorusSpec, tau: MappingClass, gamma: Point) -> SeminormValue:
    """Seminorm of the tau-twisted braid torus: ||gamma|| evaluated at tau(gamma)."""
    return braid_torus_norm(torus, tau.act_on_class(_class(gamma)))


def desatellite_norm(spec: SatelliteSpec, gamma: Point) -> SeminormValue:
    """Pattern term (2g' - 1)|y|; the satellite norm is at least this for any twist."""
    return braid_torus_norm(spec.pattern, gamma)


def companion_term(spec: SatelliteSpec, gamma: Point) -> SeminormValue:
    """Companion term (2g - 1)|r x + s w' y|: the companion norm at the twisted push-forward."""
    pushed = pattern_pushforward(gamma, spec.pattern_winding)
    twisted = spec.twist.act_on_class(pushed)
    return braid_torus_norm(spec.companion, twisted)


def schubert_lower_bound(spec: SatelliteSpec, gamma: Point) -> SeminormValue:
    """Lower bound (2g' - 1)|y| + (2g - 1)|r x + s w' y| for the satellite seminorm.

    Exact for the plumbing twist with exact genera, a LowerBound otherwise.
    """
    spec.companion.require_nontrivial("Schubert lower bound")
    spec.pattern.require_nontrivial("Schubert lower bound")
    total = desatellite_norm(spec, gamma).value + companion_term(spec, gamma).value
    exact = spec.is_plumbing and spec.genera_exact
    return SeminormValue(total, NormKind.EXACT if exact else NormKind.LOWER_BOUND)


def plumbing_norm(spec: SatelliteSpec, gamma: Point) -> SeminormValue:
    """Exact seminorm (2g' - 1)|y| + (2g - 1)|x| of a plumbing braid satellite."""
    if not spec.is_plumbing:
        raise NotPlumbingError(f"plumbing norm requires the twist [[0,-1],[1,0]], got '{spec.twist}'")
    spec.companion.require_nontrivial("plumbing norm")
    spec.pattern.require_nontrivial("plumbing norm")
    if not spec.genera_exact:
        raise InexactGenusError("plumbing norm requires exact genera of companion and pattern knots")
    g = spec.companion.genus.upper
    g_pattern = spec.pattern.genus.upper
    value = (2 * g_pattern - 1) * abs(Fraction(gamma.y)) + (2 * g - 1) * abs(Fraction(gamma.x))
    return SeminormValue(value, NormKind.EXACT)
