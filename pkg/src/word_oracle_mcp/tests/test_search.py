"""Tests for the bounded commutator-length search."""

import pytest

from slope_calc.errors import NotInCommutatorSubgroupError, SearchBudgetError
from word_oracle_mcp.search import cl_upper_bound, reduced_words
from word_oracle_mcp.words import GroupWord, commutator_product, parse_group_word

SQUARE = parse_group_word("x y X Y x y X Y")


def test_single_commutator():
    result = cl_upper_bound(parse_group_word("x y X Y"), k_max=1, len_max=1)
    assert result.bound == 1
    assert commutator_product(result.witness) == parse_group_word("x y X Y")


def test_identity_has_length_zero():
    assert cl_upper_bound(GroupWord.identity(2), k_max=0, len_max=0).bound == 0


def test_square_of_commutator_needs_two():
    result = cl_upper_bound(SQUARE, k_max=2, len_max=3)
    assert result.bound == 2
    assert len(result.witness) == 2
    assert commutator_product(result.witness) == SQUARE
    assert cl_upper_bound(SQUARE, k_max=1, len_max=3).bound is None


@pytest.mark.parametrize("text", ("x x y X Y X", "y X Y x", "x y x Y X y X Y", "x y X Y x Y X y"))
def test_witness_replays_exactly(text):
    word = parse_group_word(text)
    result = cl_upper_bound(word, k_max=2, len_max=3)
    assert result.bound is not None
    assert commutator_product(result.witness, word.rank) == word


def test_conjugates_of_commutators_are_found():
    assert cl_upper_bound(parse_group_word("y X Y x"), k_max=1, len_max=1).bound == 1
    assert cl_upper_bound(parse_group_word("x x y X Y X"), k_max=1, len_max=1).bound == 1


def test_bound_is_monotone_in_budgets(subtests):
    words = [parse_group_word(text) for text in ("x y X Y", "x y x Y X y X Y", "x x y X X Y", "x y X Y x y X Y")]
    for word in words:
        for k_max in range(0, 3):
            for len_max in range(0, 3):
                with subtests.test(word=str(word), k_max=k_max, len_max=len_max):
                    small = cl_upper_bound(word, k_max, len_max).bound
                    for larger in (cl_upper_bound(word, k_max + 1, len_max), cl_upper_bound(word, k_max, len_max + 1)):
                        if small is not None:
                            assert larger.bound is not None and larger.bound <= small


def test_word_outside_commutator_subgroup():
    with pytest.raises(NotInCommutatorSubgroupError, match="not in the commutator subgroup"):
        cl_upper_bound(parse_group_word("x y"), k_max=2, len_max=2)


def test_node_limit():
    with pytest.raises(SearchBudgetError, match="node limit of 10"):
        cl_upper_bound(SQUARE, k_max=2, len_max=3, node_limit=10)


def test_reduced_words_are_shortlex():
    words = [str(word) for word in reduced_words(2, 1)]
    assert words == ["", "x", "X", "y", "Y"]
    assert len(list(reduced_words(2, 3))) == 1 + 4 + 12 + 36
