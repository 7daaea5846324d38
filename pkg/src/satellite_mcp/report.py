"""Per-slope aggregation of the satellite formulas."""

from __future__ import annotations

from dataclasses import dataclass, field

from mapping_class_mcp.sl2z import Slope
from satellite_mcp.genus_bounds import GenusBounds, odd_slope_parity, singular_genus_bounds
from satellite_mcp.norms import SeminormValue, schubert_lower_bound
from satellite_mcp.specs import SatelliteSpec
from slope_calc.errors import SlopeCalcError


@dataclass(frozen=True)
class SlopeReport:
    """Norm and genus bounds of one slope; a field is None when its hypotheses fail.

    ``errors`` maps the missing field name to the reason.
    """

    slope: Slope
    norm: SeminormValue | None
    genus: GenusBounds | None
    parity_gap: bool = False
    errors: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data: dict = {
            "slope": [self.slope.x, self.slope.y],
            "norm": self.norm.to_dict() if self.norm else None,
            "singular_genus": self.genus.to_dict() if self.genus else None,
            "genus_upper": self.genus.genus_upper if self.genus else None,
            "norm_not_realized_by_singular_genus": self.parity_gap,
        }
        if self.errors:
            data["errors"] = dict(self.errors)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> SlopeReport:
        singular = data.get("singular_genus")
        return cls(
            slope=Slope(*data["slope"]),
            norm=SeminormValue.from_dict(data["norm"]) if data.get("norm") else None,
            genus=GenusBounds.from_dict(singular, data.get("genus_upper")) if singular else None,
            parity_gap=data.get("norm_not_realized_by_singular_genus", False),
            errors=dict(data.get("errors", {})),
        )


def slope_report(spec: SatelliteSpec, c: Slope) -> SlopeReport:
    """Evaluate every formula at c; failures are recorded instead of raised."""
    errors: dict[str, str] = {}
    norm = genus = None
    try:
        norm = schubert_lower_bound(spec, c)
    except SlopeCalcError as exc:
        errors["norm"] = str(exc)
    try:
        genus = singular_genus_bounds(spec, c)
    except SlopeCalcError as exc:
        errors["singular_genus"] = str(exc)
    return SlopeReport(slope=c, norm=norm, genus=genus, parity_gap=odd_slope_parity(spec, c), errors=errors)
