"""One-directional verdicts about extendable and stable extendable subgroups of Mod(T^2).

A verdict is a certificate: it records the criterion that produced it (a citation tag)
and the parameters it was evaluated at. Nothing here computes the subgroups themselves.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from mapping_class_mcp.sl2z import ETA, XI, Slope, fixes_xi_up_to_sign, slopes_up_to
from satellite_mcp.genus_bounds import singular_genus_bounds
from satellite_mcp.norms import plumbing_norm
from satellite_mcp.specs import SatelliteSpec
from slope_calc.errors import InvalidInputError, NotPlumbingError, SlopeCalcError, criterion

logger = logging.getLogger("Extendability")

VALUE_SET_INDEX = "value-set-index"
NONDEGENERATE_NORM = "nondegenerate-norm"
TWIST_MOVES_XI = "twist-moves-xi"
NULL_SINGULAR_GENUS_TWIST = "null-singular-genus-twist"
UNKNOTTED_TORUS = "unknotted-torus"


class Subject(str, Enum):
    EXTENDABLE = "ExtendableSubgroup"
    STABLE_EXTENDABLE = "StableExtendableSubgroup"


class Conclusion(str, Enum):
    FINITE = "Finite"
    INFINITE_INDEX = "InfiniteIndex"
    INDEX_AT_LEAST = "IndexAtLeast"
    STABLY_EXTENDABLE = "StablyExtendable"
    NO_CONCLUSION = "NoConclusion"


class SlopeInvariant(str, Enum):
    """Slope invariants preserved by stably extendable automorphisms."""

    NORM = "norm"
    SINGULAR_GENUS = "singular-genus"


@dataclass(frozen=True)
class Justification:
    tag: str
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def reference(self) -> str:
        return criterion(self.tag)

    def to_dict(self) -> dict:
        return {"tag": self.tag, "reference": self.reference, "parameters": dict(self.parameters)}


@dataclass(frozen=True)
class ExtendabilityVerdict:
    """Conclusion about one subgroup; ``index`` is set exactly for IndexAtLeast."""

    subject: Subject
    conclusion: Conclusion
    justification: Justification
    index: int | None = None

    def __post_init__(self) -> None:
        if (self.conclusion == Conclusion.INDEX_AT_LEAST) != (self.index is not None):
            raise InvalidInputError("IndexAtLeast verdicts carry an index, other verdicts do not")
        if self.index is not None and self.index < 1:
            raise InvalidInputError(f"index lower bound must be at least 1, got {self.index}")

    def __str__(self) -> str:
        conclusion = self.conclusion.value
        if self.index is not None:
            conclusion = f"{conclusion}({self.index})"
        return f"{self.subject.value}: {conclusion} [{self.justification.tag}]"

    def to_dict(self) -> dict:
        data = {
            "subject": self.subject.value,
            "conclusion": self.conclusion.value,
            "justification": self.justification.to_dict(),
        }
        if self.index is not None:
            data["index"] = self.index
        return data


def _genera(spec: SatelliteSpec) -> dict[str, Any]:
    return {"g": spec.companion.genus_for_bounds(), "g_pattern": spec.pattern.genus_for_bounds()}


def finiteness_from_norm(spec: SatelliteSpec) -> ExtendabilityVerdict:
    """The plumbing norm (2g' - 1)|y| + (2g - 1)|x| is nondegenerate, so the stable subgroup is finite."""
    if not spec.is_plumbing:
        raise NotPlumbingError("exact norm unavailable for a non-plumbing twist; use finiteness_from_twist")
    on_xi = plumbing_norm(spec, XI).value
    on_eta = plumbing_norm(spec, ETA).value
    parameters = {**_genera(spec), "norm_xi": str(on_xi), "norm_eta": str(on_eta)}
    if on_xi > 0 and on_eta > 0:
        return ExtendabilityVerdict(
            Subject.STABLE_EXTENDABLE, Conclusion.FINITE, Justification(NONDEGENERATE_NORM, parameters)
        )
    return ExtendabilityVerdict(
        Subject.STABLE_EXTENDABLE, Conclusion.NO_CONCLUSION, Justification(NONDEGENERATE_NORM, parameters)
    )


def finiteness_from_twist(spec: SatelliteSpec) -> ExtendabilityVerdict:
    """A twist that does not fix xi up to sign makes the stable extendable subgroup finite."""
    spec.companion.require_nontrivial("finiteness from the twist")
    spec.pattern.require_nontrivial("finiteness from the twist")
    fixes = fixes_xi_up_to_sign(spec.twist)
    justification = Justification(TWIST_MOVES_XI, {"twist": str(spec.twist), "fixes_xi_up_to_sign": fixes})
    conclusion = Conclusion.NO_CONCLUSION if fixes else Conclusion.FINITE
    return ExtendabilityVerdict(Subject.STABLE_EXTENDABLE, conclusion, justification)


def index_lower_bound(
    values: Mapping[Slope, Hashable], subject: Subject = Subject.STABLE_EXTENDABLE
) -> ExtendabilityVerdict:
    """Distinct values of an invariant lie in distinct cosets: index >= number of distinct values."""
    if not values:
        raise InvalidInputError("index lower bound needs a non-empty slope value map")
    distinct = len(set(values.values()))
    parameters = {"slopes": len(values), "distinct_values": distinct}
    justification = Justification(VALUE_SET_INDEX, parameters)
    return ExtendabilityVerdict(subject, Conclusion.INDEX_AT_LEAST, justification, distinct)


def infinite_index_from_growth(spec: SatelliteSpec) -> ExtendabilityVerdict:
    """The singular genus is at least ((2g' - 1)|y| + 1)/2, unbounded over slopes: infinite index."""
    spec.companion.require_nontrivial("infinite index from growth")
    spec.pattern.require_nontrivial("infinite index from growth")
    parameters = {"g_pattern": spec.pattern.genus_for_bounds(), "growth": "(2g'-1)|y|"}
    return ExtendabilityVerdict(
        Subject.STABLE_EXTENDABLE, Conclusion.INFINITE_INDEX, Justification(VALUE_SET_INDEX, parameters)
    )


def dehn_twist_stably_extendable(c: Slope, singular_genus: int) -> ExtendabilityVerdict:
    """A slope of singular genus 0 has a stably extendable Dehn twist."""
    if singular_genus < 0:
        raise InvalidInputError(f"singular genus must be nonnegative, got {singular_genus}")
    conclusion = Conclusion.STABLY_EXTENDABLE if singular_genus == 0 else Conclusion.NO_CONCLUSION
    justification = Justification(NULL_SINGULAR_GENUS_TWIST, {"slope": str(c), "singular_genus": singular_genus})
    return ExtendabilityVerdict(Subject.STABLE_EXTENDABLE, conclusion, justification)


@dataclass(frozen=True)
class UnknottedTorusFacts:
    """Known subgroups for the unknotted torus."""

    stable_extendable: str = "Mod(T^2)"
    extendable_index: int = 3
    extendable_index_floor: int = 3
    stable_contains_extendable: bool = True
    tag: str = UNKNOTTED_TORUS

    def to_dict(self) -> dict:
        return {
            "stable_extendable": self.stable_extendable,
            "extendable_index": self.extendable_index,
            "extendable_index_floor": self.extendable_index_floor,
            "stable_contains_extendable": self.stable_contains_extendable,
            "tag": self.tag,
            "reference": criterion(self.tag),
        }


def unknotted_torus_facts() -> UnknottedTorusFacts:
    return UnknottedTorusFacts()


def slope_value_table(
    spec: SatelliteSpec, bound: int, invariant: SlopeInvariant = SlopeInvariant.NORM
) -> dict[Slope, Hashable]:
    """Invariant values over ``slopes_up_to(bound)``.

    Only certified values enter the table: exact plumbing norms, or singular genera on
    the slopes where they are known exactly.
    """
    table: dict[Slope, Hashable] = {}
    for c in slopes_up_to(bound):
        if invariant == SlopeInvariant.NORM:
            table[c] = plumbing_norm(spec, c).value
            continue
        exact = singular_genus_bounds(spec, c).singular_exact
        if exact is not None:
            table[c] = exact
    logger.debug("value table over %d slopes, %d distinct values", len(table), len(set(table.values())))
    return table


@dataclass(frozen=True)
class ExtendabilityReport:
    """Every verdict available for a spec; criteria whose hypotheses fail are listed with reasons."""

    verdicts: tuple[ExtendabilityVerdict, ...]
    errors: dict[str, str] = field(default_factory=dict)
    facts: UnknottedTorusFacts | None = None

    def to_dict(self) -> dict:
        data: dict[str, Any] = {"verdicts": [verdict.to_dict() for verdict in self.verdicts]}
        if self.errors:
            data["errors"] = dict(self.errors)
        if self.facts is not None:
            data["unknotted_torus"] = self.facts.to_dict()
        return data


def extendability_report(
    spec: SatelliteSpec | None,
    bound: int,
    dehn_twist: tuple[Slope, int] | None = None,
) -> ExtendabilityReport:
    """Run every criterion; with no spec only the unknotted-torus facts and the Dehn twist verdict apply."""
    verdicts: list[ExtendabilityVerdict] = []
    errors: dict[str, str] = {}
    if spec is not None:
        criteria = {
            "finiteness_from_norm": lambda: finiteness_from_norm(spec),
            "finiteness_from_twist": lambda: finiteness_from_twist(spec),
            "index_lower_bound": lambda: index_lower_bound(slope_value_table(spec, bound)),
            "infinite_index_from_growth": lambda: infinite_index_from_growth(spec),
        }
        for name, evaluate in criteria.items():
            try:
                verdicts.append(evaluate())
            except SlopeCalcError as exc:
                errors[name] = str(exc)
    if dehn_twist is not None:
        verdicts.append(dehn_twist_stably_extendable(*dehn_twist))
    facts = unknotted_torus_facts() if spec is None else None
    return ExtendabilityReport(tuple(verdicts), errors, facts)
