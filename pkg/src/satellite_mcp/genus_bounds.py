"""Singular-genus and genus bounds for primitive slopes of a braid satellite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mapping_class_mcp.sl2z import Slope
from satellite_mcp.norms import plumbing_norm, schubert_lower_bound
from satellite_mcp.specs import SatelliteSpec
from slope_calc.errors import HypothesisError, InexactGenusError, InternalInvariantError, NotPlumbingError

POSITIVE_NORM = "positive-norm"


@dataclass(frozen=True)
class GenusBounds:
    """Bounds on the singular genus g*(c) and the genus g(c) of a slope."""

    singular_lower: int
    singular_upper: int | None = None
    singular_exact: int | None = None
    genus_upper: int | None = None

    def __post_init__(self) -> None:
        if self.singular_upper is not None and self.singular_upper < self.singular_lower:
            raise InternalInvariantError(f"singular genus bounds [{self.singular_lower}, {self.singular_upper}] cross")
        upper = self.singular_exact if self.singular_upper is None else self.singular_upper
        if self.singular_exact is not None and not self.singular_lower <= self.singular_exact <= upper:
            raise InternalInvariantError(f"exact singular genus {self.singular_exact} outside its bounds")

    def to_dict(self) -> dict:
        return {"lower": self.singular_lower, "upper": self.singular_upper, "exact": self.singular_exact}

    @classmethod
    def from_dict(cls, singular: dict, genus_upper: int | None) -> GenusBounds:
        return cls(singular["lower"], singular["upper"], singular["exact"], genus_upper)


def singular_lower_from_norm(norm: Fraction) -> int:
    """ceil((N + 1)/2): the singular genus lower bound implied by a norm value N."""
    return math.ceil((norm + 1) / 2)


def _both_odd(c: Slope) -> bool:
    return c.x % 2 == 1 and c.y % 2 == 1


def genus_upper_bound(spec: SatelliteSpec, c: Slope) -> int:
    """Genus of an explicit surface for the plumbing slope: g|x| + g'|y| + (|x| - 1)(|y| - 1)/2."""
    if not spec.is_plumbing:
        raise NotPlumbingError("genus upper bound requires the plumbing twist [[0,-1],[1,0]]")
    if not spec.genera_exact:
        raise InexactGenusError("genus upper bound requires exact genera of companion and pattern knots")
    x, y = abs(c.x), abs(c.y)
    twisted_bands = (x - 1) * (y - 1)
    if twisted_bands % 2:
        raise InternalInvariantError(f"(|x| - 1)(|y| - 1) is odd for the primitive slope {c}")
    return spec.companion.genus.upper * x + spec.pattern.genus.upper * y + twisted_bands // 2


def odd_slope_parity(spec: SatelliteSpec, c: Slope) -> bool:
    """True when the plumbing norm of c is even, so (N + 1)/2 is not a realised singular genus."""
    return spec.is_plumbing and _both_odd(c)


def singular_genus_bounds(spec: SatelliteSpec, c: Slope) -> GenusBounds:
    """Bounds on the singular genus of c from the satellite seminorm.

    Plumbing satellites with exact genera get the two-sided bound
    ceil((N+1)/2) <= g* <= floor((N+3)/2), exact N/2 + 1 on odd-odd slopes, and the genus
    upper bound. Every other spec gets the one-sided bound ceil((L+1)/2) from the
    Schubert lower bound L, which must be positive.
    """
    if spec.is_plumbing and spec.genera_exact:
        norm = plumbing_norm(spec, c).value
        lower = singular_lower_from_norm(norm)
        upper = math.floor((norm + 3) / 2)
        exact = None
        if _both_odd(c):
            if norm.denominator != 1 or norm.numerator % 2:
                raise InternalInvariantError(f"plumbing norm {norm} of odd slope {c} is not even")
            exact = int(norm / 2 + 1)
        return GenusBounds(lower, upper, exact, genus_upper_bound(spec, c))

    bound = schubert_lower_bound(spec, c).value
    if bound <= 0:
        raise HypothesisError(f"singular genus lower bound needs a positive norm bound on the slope {c}", POSITIVE_NORM)
    return GenusBounds(singular_lower_from_norm(bound))
