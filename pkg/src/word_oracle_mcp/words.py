"""Reduced words in a free group of finite rank.

Generators are numbered 1, 2, ...; the letter ``-k`` is the inverse of generator ``k``.
The text form names generators x, y, z, w, a, b, ... with uppercase for inverses.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from slope_calc.errors import InvalidInputError, ParseError

GENERATOR_NAMES = "xyzwabcdefghijklmnopqrstuv"


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word; construction reduces ``letters``."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise InvalidInputError(f"free group rank must be at least 1, got {self.rank}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.rank:
                raise InvalidInputError(f"letter {letter} is not a generator of the free group of rank {self.rank}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def identity(cls, rank: int) -> GroupWord:
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int) -> GroupWord:
        return cls(rank, (index,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return self.concat(other)

    def __str__(self) -> str:
        return " ".join(
            GENERATOR_NAMES[abs(letter) - 1] if letter > 0 else GENERATOR_NAMES[abs(letter) - 1].upper()
            for letter in self.letters
        )

    def concat(self, other: GroupWord) -> GroupWord:
        if self.rank != other.rank:
            raise InvalidInputError("cannot multiply words from free groups of different rank")
        return GroupWord(self.rank, self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(self.rank, tuple(-letter for letter in reversed(self.letters)))

    def conjugate(self, by: GroupWord) -> GroupWord:
        """by · self · by⁻¹"""
        return by * self * by.inverse()

    def abelianization(self) -> tuple[int, ...]:
        """Exponent sum of each generator."""
        sums = [0] * self.rank
        for letter in self.letters:
            sums[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(sums)

    def cyclic_reduction(self) -> tuple[GroupWord, GroupWord]:
        """Split into (core, conjugator) with self = conjugator · core · conjugator⁻¹, core cyclically reduced."""
        letters = self.letters
        start, end = 0, len(letters)
        while end - start >= 2 and letters[start] == -letters[end - 1]:
            start += 1
            end -= 1
        return GroupWord(self.rank, letters[start:end]), GroupWord(self.rank, letters[:start])

    def rotations(self) -> list[tuple[GroupWord, GroupWord]]:
        """Cyclic rotations as (rotated, prefix) with self = prefix · rotated · prefix⁻¹."""
        letters = self.letters
        return [
            (GroupWord(self.rank, letters[i:] + letters[:i]), GroupWord(self.rank, letters[:i]))
            for i in range(max(len(letters), 1))
        ]


def reduce(letters: Sequence[int], rank: int | None = None) -> GroupWord:
    """Free reduction of a raw letter sequence; the rank defaults to the largest generator used."""
    if rank is None:
        rank = max((abs(letter) for letter in letters), default=1)
    return GroupWord(rank, tuple(letters))


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """[a, b] = a b a⁻¹ b⁻¹"""
    return a * b * a.inverse() * b.inverse()


def commutator_product(pairs: Sequence[tuple[GroupWord, GroupWord]], rank: int | None = None) -> GroupWord:
    """Reduced product of the commutators [a_i, b_i]."""
    if not pairs:
        return GroupWord.identity(rank or 1)
    result = GroupWord.identity(pairs[0][0].rank)
    for a, b in pairs:
        result = result * commutator(a, b)
    return result


def parse_group_word(text: str, rank: int | None = None) -> GroupWord:
    """Parse ``"x y X Y"`` (or ``"xyXY"``) letters, or signed integers ``"1 2 -1 -2"``."""
    tokens = text.replace(",", " ").split()
    letters: list[int] = []
    if tokens and all(token.lstrip("+-").isdigit() for token in tokens):
        letters = [int(token) for token in tokens]
        if 0 in letters:
            raise ParseError("group word letter '0' is not a generator")
    else:
        for char in "".join(tokens):
            index = GENERATOR_NAMES.find(char.lower())
            if index < 0:
                raise ParseError(f"'{char}' is not a generator name ({GENERATOR_NAMES[:4]}, ... ; uppercase = inverse)")
            letters.append(index + 1 if char.islower() else -(index + 1))
    used = max((abs(letter) for letter in letters), default=1)
    if rank is not None and used > rank:
        raise ParseError(f"word uses generator {used} but the free group has rank {rank}")
    return GroupWord(rank or used, tuple(letters))
