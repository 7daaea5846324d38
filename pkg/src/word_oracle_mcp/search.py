"""Bounded search for short products of commutators.

The search only ever certifies upper bounds on commutator length: a missing result
says nothing about words beyond the budgets.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass

from slope_calc.config import SLOPE_CALC_NODE_LIMIT
from slope_calc.errors import (
    InternalInvariantError,
    InvalidInputError,
    NotInCommutatorSubgroupError,
    SearchBudgetError,
)
from word_oracle_mcp.words import GroupWord, commutator, commutator_product

logger = logging.getLogger("CommutatorSearch")

Pair = tuple[GroupWord, GroupWord]


@dataclass(frozen=True)
class ClSearchResult:
    """Smallest k found (None if none within budget) and a witness replaying to the word."""

    bound: int | None
    witness: tuple[Pair, ...]
    nodes: int

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "witness": [[list(a.letters), list(b.letters)] for a, b in self.witness],
            "witness_text": [[str(a), str(b)] for a, b in self.witness],
            "nodes": self.nodes,
        }


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def spend(self, count: int = 1) -> None:
        self.nodes += count
        if self.nodes > self.limit:
            raise SearchBudgetError(self.limit)


def reduced_words(rank: int, max_length: int) -> Iterator[GroupWord]:
    """All reduced words of length <= max_length in shortlex order (by length, then letters)."""
    alphabet = sorted((letter for k in range(1, rank + 1) for letter in (k, -k)), key=lambda v: (abs(v), v < 0))
    yield GroupWord(rank)
    level: list[tuple[int, ...]] = [()]
    for _ in range(max_length):
        level = [word + (letter,) for word in level for letter in alphabet if not word or word[-1] != -letter]
        for letters in level:
            yield GroupWord(rank, letters)


def commutator_table(rank: int, len_max: int, budget: _Budget) -> dict[GroupWord, Pair]:
    """Distinct nontrivial single commutators [a, b] with |a|, |b| <= len_max, first witness kept."""
    words = list(reduced_words(rank, len_max))
    table: dict[GroupWord, Pair] = {}
    for a, b in itertools.product(words, repeat=2):
        budget.spend()
        value = commutator(a, b)
        if value.letters and value not in table:
            table[value] = (a, b)
    return table


def _conjugate_pairs(pairs: tuple[Pair, ...], by: GroupWord) -> tuple[Pair, ...]:
    return tuple((a.conjugate(by), b.conjugate(by)) for a, b in pairs)


def cl_upper_bound(
    w: GroupWord, k_max: int, len_max: int, node_limit: int | None = None
) -> ClSearchResult:
    """Smallest k <= k_max with w a product of k commutators of words of length <= len_max.

    The search runs on the cyclic reduction of w and all its rotations (commutator length
    is conjugation invariant), deduplicates single commutators, and meets in the middle:
    products of k - 1 commutators are tabulated, the last factor is looked up. The
    returned witness is conjugated back, so its entries may be longer than len_max.
    """
    if k_max < 0 or len_max < 0:
        raise InvalidInputError(f"search budgets must be nonnegative, got k_max={k_max}, len_max={len_max}")
    if any(w.abelianization()):
        raise NotInCommutatorSubgroupError(
            f"'{w}' has abelianization {list(w.abelianization())}; it is not in the commutator subgroup"
        )
    if not w.letters:
        return ClSearchResult(0, (), 0)

    budget = _Budget(SLOPE_CALC_NODE_LIMIT if node_limit is None else node_limit)
    core, conjugator = w.cyclic_reduction()
    rotations = core.rotations()
    table = commutator_table(w.rank, len_max, budget) if k_max >= 1 else {}
    logger.debug("%d distinct commutators with factors of length <= %d", len(table), len_max)

    products: dict[GroupWord, tuple[Pair, ...]] = {GroupWord.identity(w.rank): ()}
    for k in range(1, k_max + 1):
        for rotated, prefix in rotations:
            for product, pairs in products.items():
                budget.spend()
                last = product.inverse() * rotated
                if last in table:
                    witness = _conjugate_pairs(pairs + (table[last],), conjugator * prefix)
                    if commutator_product(witness) != w:
                        raise InternalInvariantError(f"commutator witness for '{w}' does not replay")
                    logger.debug("'%s' is a product of %d commutators (%d nodes)", w, k, budget.nodes)
                    return ClSearchResult(k, witness, budget.nodes)
        if k == k_max:
            break
        extended: dict[GroupWord, tuple[Pair, ...]] = {}
        for product, pairs in products.items():
            for value, pair in table.items():
                budget.spend()
                extended.setdefault(product * value, pairs + (pair,))
        products = extended
    return ClSearchResult(None, (), budget.nodes)
