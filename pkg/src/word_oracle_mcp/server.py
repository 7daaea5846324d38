"""Word oracle MCP toolset: free-group words and commutator-length upper bounds."""

from __future__ import annotations

import logging
from typing import Annotated, Any, Callable

from pydantic import Field

from slope_calc.config import SLOPE_CALC_CL_K_MAX, SLOPE_CALC_CL_LEN_MAX
from slope_calc.mcp import SlopeCalcMCP
from tools.common import run_calculator_tool
from word_oracle_mcp.search import cl_upper_bound
from word_oracle_mcp.words import commutator_product, parse_group_word

WordParam = Annotated[
    str, Field(description="Free-group word, e.g. 'x y X Y' (uppercase = inverse) or '1 2 -1 -2'")
]
RankParam = Annotated[int | None, Field(description="Rank of the free group; defaults to the largest generator used")]


def describe_word(text: str, rank: int | None = None) -> dict[str, Any]:
    """Reduced form, abelianization and cyclic reduction of a word."""
    word = parse_group_word(text, rank)
    core, conjugator = word.cyclic_reduction()
    return {
        "rank": word.rank,
        "letters": list(word.letters),
        "text": str(word),
        "length": len(word),
        "abelianization": list(word.abelianization()),
        "cyclic_core": list(core.letters),
        "conjugator": list(conjugator.letters),
    }


class WordOracleMCP(SlopeCalcMCP):
    """MCP server for commutator-length upper bounds in free groups."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("WordOracleMCP")

        general_intro = """You find short expressions of free-group words as products of
        commutators [a, b] = a b a^-1 b^-1. Results are upper bounds on commutator length
        only: when no bound is found within the budgets, say so, never claim a lower bound.
        """

        super().__init__(name="Word Oracle MCP Server", toolset_name="word-oracle", instructions=general_intro)

    def register_tools(self) -> None:
        """Register all available tools with the MCP server."""
        tool_functions: list[Callable[..., Any]] = [
            self.reduce_word,
            self.multiply_commutators,
            self.commutator_length_bound,
        ]
        self.add_calculator_tools(tool_functions)

    def reduce_word(self, word: WordParam, rank: RankParam = None) -> str:
        """Free reduction, abelianization and cyclic reduction of a free-group word.

        Returns:
            dict: rank, letters (signed integers), text, length, abelianization, cyclic_core, conjugator.
        """
        return run_calculator_tool(lambda: describe_word(word, rank), "word reduction", self.logger)

    def multiply_commutators(
        self,
        pairs: Annotated[list[list[str]], Field(description="Pairs [a, b] of words, e.g. [['x', 'y'], ['y', 'x']]")],
        rank: RankParam = None,
    ) -> str:
        """Reduced product of the commutators [a_1, b_1] ... [a_k, b_k].

        Returns:
            dict: rank, letters, text.
        """

        def operation() -> dict[str, Any]:
            if any(len(pair) != 2 for pair in pairs):
                raise ValueError("every commutator needs exactly two words")
            group_rank = rank or max(
                (parse_group_word(text).rank for pair in pairs for text in pair), default=1
            )
            parsed = [(parse_group_word(a, group_rank), parse_group_word(b, group_rank)) for a, b in pairs]
            product = commutator_product(parsed, group_rank)
            return {"rank": group_rank, "letters": list(product.letters), "text": str(product)}

        return run_calculator_tool(operation, "commutator product", self.logger)

    def commutator_length_bound(
        self,
        word: WordParam,
        k_max: Annotated[int, Field(description="Largest number of commutators to try", ge=0)] = SLOPE_CALC_CL_K_MAX,
        len_max: Annotated[int, Field(description="Longest commutator entry to try", ge=0)] = SLOPE_CALC_CL_LEN_MAX,
        rank: RankParam = None,
    ) -> str:
        """Upper bound on commutator length by bounded search, with a witness that replays exactly.

        A null bound means nothing was found within the budgets; it is not a lower bound.

        Returns:
            dict: bound, witness (pairs of signed-integer words), witness_text, nodes.
        """
        return run_calculator_tool(
            lambda: cl_upper_bound(parse_group_word(word, rank), k_max, len_max).to_dict(),
            "commutator length bound",
            self.logger,
        )


mcp = WordOracleMCP()
