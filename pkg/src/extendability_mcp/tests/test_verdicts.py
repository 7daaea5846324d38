"""Tests for extendability verdicts."""

import random

import pytest

from braid_mcp.braid import BraidWord
from extendability_mcp.verdicts import (
    Conclusion,
    ExtendabilityVerdict,
    Justification,
    SlopeInvariant,
    Subject,
    dehn_twist_stably_extendable,
    extendability_report,
    finiteness_from_norm,
    finiteness_from_twist,
    index_lower_bound,
    infinite_index_from_growth,
    slope_value_table,
    unknotted_torus_facts,
)
from mapping_class_mcp.sl2z import PLUMBING, MappingClass, Slope, compose
from satellite_mcp.specs import satellite_spec
from satellite_mcp.tests.conftest import CINQUEFOIL, FIGURE_EIGHT, THREE_FOLD, TREFOIL
from slope_calc.errors import CRITERIA, HypothesisError, InvalidInputError, NotPlumbingError


def test_finiteness_from_norm(trefoil_plumbing):
    verdict = finiteness_from_norm(trefoil_plumbing)
    assert verdict.subject == Subject.STABLE_EXTENDABLE
    assert verdict.conclusion == Conclusion.FINITE
    assert verdict.justification.tag == "nondegenerate-norm"
    assert finiteness_from_norm(satellite_spec(THREE_FOLD, PLUMBING, CINQUEFOIL)).conclusion == Conclusion.FINITE


def test_finiteness_from_norm_needs_plumbing(sheared_trefoils):
    with pytest.raises(NotPlumbingError, match="exact norm unavailable"):
        finiteness_from_norm(sheared_trefoils)


@pytest.mark.parametrize(
    ("twist", "conclusion"),
    (
        (PLUMBING, Conclusion.FINITE),
        (MappingClass(1, 1, 0, 1), Conclusion.NO_CONCLUSION),
        (MappingClass(2, 1, 1, 1), Conclusion.FINITE),
    ),
)
def test_finiteness_from_twist(twist, conclusion):
    verdict = finiteness_from_twist(satellite_spec(TREFOIL, twist, FIGURE_EIGHT))
    assert verdict.conclusion == conclusion
    assert verdict.justification.tag == "twist-moves-xi"


def _random_twists(rng: random.Random, count: int) -> list[MappingClass]:
    """Random products of [[1,1],[0,1]] and [[1,0],[1,1]] with nonzero lower-left entry."""
    generators = (MappingClass(1, 1, 0, 1), MappingClass(1, 0, 1, 1))
    twists: list[MappingClass] = []
    while len(twists) < count:
        tau = MappingClass.identity()
        for _ in range(rng.randint(1, 10)):
            step = rng.choice(generators)
            tau = compose(tau, step if rng.random() < 0.5 else step.inverse())
        if tau.r != 0:
            twists.append(tau)
    return twists


def test_twists_moving_xi_give_finite_subgroups(subtests):
    rng = random.Random(31)
    pairs = ((TREFOIL, FIGURE_EIGHT), (CINQUEFOIL, TREFOIL), (FIGURE_EIGHT, THREE_FOLD))
    for case, tau in enumerate(_random_twists(rng, 50)):
        companion, pattern = pairs[case % len(pairs)]
        with subtests.test(case=case, twist=str(tau)):
            verdict = finiteness_from_twist(satellite_spec(companion, tau, pattern))
            assert verdict.conclusion == Conclusion.FINITE
            assert verdict.justification.parameters == {"twist": str(tau), "fixes_xi_up_to_sign": False}


def test_finiteness_from_twist_needs_nontrivial_knots():
    with pytest.raises(HypothesisError, match="nontrivial-knot"):
        finiteness_from_twist(satellite_spec(TREFOIL, PLUMBING, BraidWord(2, (1,))))


@pytest.mark.parametrize(
    ("companion", "pattern", "bound", "index"),
    (
        (TREFOIL, CINQUEFOIL, 3, 9),
        (TREFOIL, FIGURE_EIGHT, 2, 3),
        (TREFOIL, FIGURE_EIGHT, 1, 2),
    ),
)
def test_index_lower_bound_from_norm_values(companion, pattern, bound, index):
    values = slope_value_table(satellite_spec(companion, PLUMBING, pattern), bound)
    verdict = index_lower_bound(values)
    assert verdict.conclusion == Conclusion.INDEX_AT_LEAST
    assert verdict.index == index
    assert verdict.justification.tag == "value-set-index"


def test_norm_value_set_for_genus_one_and_two():
    values = slope_value_table(satellite_spec(TREFOIL, PLUMBING, CINQUEFOIL), 3)
    assert set(values.values()) == {1, 3, 4, 5, 6, 7, 9, 10, 11}


def test_index_lower_bound_constant_invariant():
    assert index_lower_bound({Slope(1, 0): 5, Slope(0, 1): 5}).index == 1


def test_index_lower_bound_rejects_empty_map():
    with pytest.raises(InvalidInputError, match="non-empty"):
        index_lower_bound({})


def test_index_lower_bound_is_monotone(subtests):
    spec = satellite_spec(CINQUEFOIL, PLUMBING, TREFOIL)
    previous = 0
    for bound in range(1, 11):
        with subtests.test(bound=bound):
            index = index_lower_bound(slope_value_table(spec, bound)).index
            assert index >= previous
            previous = index
    assert previous > index_lower_bound(slope_value_table(spec, 3)).index


def test_singular_genus_value_table(trefoil_plumbing):
    values = slope_value_table(trefoil_plumbing, 3, SlopeInvariant.SINGULAR_GENUS)
    assert all(c.x % 2 == 1 and c.y % 2 == 1 for c in values)
    assert values[Slope(1, 1)] == 2
    assert values[Slope(3, -1)] == 3


def test_norm_value_table_needs_plumbing(sheared_trefoils):
    with pytest.raises(NotPlumbingError):
        slope_value_table(sheared_trefoils, 2)


def test_infinite_index_from_growth(sheared_trefoils):
    verdict = infinite_index_from_growth(sheared_trefoils)
    assert verdict.conclusion == Conclusion.INFINITE_INDEX
    assert verdict.justification.tag == "value-set-index"


@pytest.mark.parametrize(
    ("genus", "conclusion"), ((0, Conclusion.STABLY_EXTENDABLE), (2, Conclusion.NO_CONCLUSION))
)
def test_dehn_twist_stably_extendable(genus, conclusion):
    verdict = dehn_twist_stably_extendable(Slope(1, 1), genus)
    assert verdict.conclusion == conclusion
    parameters = {"slope": "1/1", "singular_genus": genus}
    assert verdict.justification == Justification("null-singular-genus-twist", parameters)


def test_dehn_twist_rejects_negative_genus():
    with pytest.raises(InvalidInputError, match="nonnegative"):
        dehn_twist_stably_extendable(Slope(1, 1), -1)


def test_unknotted_torus_facts():
    facts = unknotted_torus_facts().to_dict()
    assert facts == {
        "stable_extendable": "Mod(T^2)",
        "extendable_index": 3,
        "extendable_index_floor": 3,
        "stable_contains_extendable": True,
        "tag": "unknotted-torus",
        "reference": "extendable and stable extendable subgroups of the unknotted torus are known",
    }


def test_verdict_validation():
    with pytest.raises(InvalidInputError):
        ExtendabilityVerdict(Subject.EXTENDABLE, Conclusion.INDEX_AT_LEAST, Justification("value-set-index"))
    with pytest.raises(InvalidInputError):
        ExtendabilityVerdict(Subject.EXTENDABLE, Conclusion.INDEX_AT_LEAST, Justification("value-set-index"), 0)
    with pytest.raises(InvalidInputError):
        ExtendabilityVerdict(Subject.EXTENDABLE, Conclusion.FINITE, Justification("nondegenerate-norm"), 3)


def test_plumbing_criteria_agree(subtests):
    for companion, pattern in ((TREFOIL, FIGURE_EIGHT), (CINQUEFOIL, TREFOIL), (THREE_FOLD, CINQUEFOIL)):
        spec = satellite_spec(companion, PLUMBING, pattern)
        with subtests.test(companion=str(companion)):
            assert finiteness_from_norm(spec).conclusion == finiteness_from_twist(spec).conclusion == Conclusion.FINITE


def test_extendability_report(trefoil_plumbing, sheared_trefoils):
    report = extendability_report(trefoil_plumbing, 2, (Slope(1, 0), 0))
    assert [str(verdict) for verdict in report.verdicts] == [
        "StableExtendableSubgroup: Finite [nondegenerate-norm]",
        "StableExtendableSubgroup: Finite [twist-moves-xi]",
        "StableExtendableSubgroup: IndexAtLeast(3) [value-set-index]",
        "StableExtendableSubgroup: InfiniteIndex [value-set-index]",
        "StableExtendableSubgroup: StablyExtendable [null-singular-genus-twist]",
    ]
    assert not report.errors

    report = extendability_report(sheared_trefoils, 2)
    assert set(report.errors) == {"finiteness_from_norm", "index_lower_bound"}
    assert report.errors["finiteness_from_norm"].startswith("[plumbing-twist]")


def test_verdicts_carry_their_criterion(trefoil_plumbing):
    report = extendability_report(trefoil_plumbing, 2, (Slope(1, 0), 0)).to_dict()
    for verdict in report["verdicts"]:
        justification = verdict["justification"]
        assert justification["reference"] == CRITERIA[justification["tag"]]
    assert Justification("twist-moves-xi").to_dict() == {
        "tag": "twist-moves-xi",
        "reference": "a satellite twist that moves xi off ±xi leaves a finite stable extendable subgroup",
        "parameters": {},
    }


def test_extendability_report_without_spec():
    report = extendability_report(None, 5)
    assert report.verdicts == ()
    assert report.to_dict() == {"verdicts": [], "unknotted_torus": unknotted_torus_facts().to_dict()}
