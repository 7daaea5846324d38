"""Braid words on n strands and the permutations they induce.

A letter ``k`` stands for the generator sigma_|k| raised to the sign of ``k``; letters are
composed left to right. The closure of the braid is a knot exactly when the induced
permutation is a single n-cycle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from slope_calc.errors import InvalidInputError, NotAKnotError, ParseError


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise InvalidInputError(f"a braid needs at least one strand, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise InvalidInputError(f"generator index {letter} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    def concat(self, other: BraidWord) -> BraidWord:
        """Concatenate two braid words on the same number of strands."""
        if self.strands != other.strands:
            raise InvalidInputError("cannot concatenate braids with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        """Return the inverse braid word."""
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def generator_counts(self) -> Counter[int]:
        """Count occurrences of each signed letter."""
        return Counter(self.letters)

    def is_homogeneous(self) -> bool:
        """True when every generator index occurs with a single sign."""
        seen = set(self.letters)
        return not any(-letter in seen for letter in seen)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidInputError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The transposition (i, i+1) on n points."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def compose(self, other: Permutation) -> Permutation:
        """Functional composition ``self ∘ other``: apply ``other`` first."""
        if len(self.images) != len(other.images):
            raise InvalidInputError("cannot compose permutations of different degrees")
        return Permutation(tuple(self(other(point)) for point in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, fixed points included."""
        seen: set[int] = set()
        result = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            result.append(tuple(cycle))
        return result

    def is_single_cycle(self) -> bool:
        return len(self.cycles()) == 1


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers into a braid word on ``strands`` strands."""
    if strands < 1:
        raise ParseError(f"strand count must be at least 1, got {strands}")
    letters = []
    for token in text.split():
        try:
            letter = int(token)
        except ValueError as exc:
            raise ParseError(f"braid token '{token}' is not an integer") from exc
        if letter == 0:
            raise ParseError("braid token '0' is not a generator (letters are nonzero)")
        if abs(letter) >= strands:
            raise ParseError(f"generator index {letter} out of range for {strands} strands")
        letters.append(letter)
    return BraidWord(strands, tuple(letters))


def parse_braid_file(text: str) -> list[BraidWord]:
    """Parse the braid file format: a ``strands=N`` header, then one word per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError("braid file is empty")
    header = lines[0].replace(" ", "")
    if not header.startswith("strands="):
        raise ParseError(f"braid file must start with 'strands=N', got '{lines[0]}'")
    try:
        strands = int(header.removeprefix("strands="))
    except ValueError as exc:
        raise ParseError(f"invalid strand count in header '{lines[0]}'") from exc
    return [parse_braid(line, strands) for line in lines[1:]]


def torus_braid(p: int, q: int) -> BraidWord:
    """The braid (sigma_1 ... sigma_{p-1})^q whose closure is the (p, q) torus link."""
    if p < 1 or q < 0:
        raise InvalidInputError(f"torus braid needs p >= 1 and q >= 0, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


def permutation(braid: BraidWord) -> Permutation:
    """Product t_1 ∘ t_2 ∘ ... ∘ t_m of the letter transpositions (|k|, |k|+1)."""
    result = Permutation.identity(braid.strands)
    for letter in braid.letters:
        result = result.compose(Permutation.transposition(braid.strands, abs(letter)))
    return result


def closure_is_knot(braid: BraidWord) -> bool:
    """True iff the closure of ``braid`` has a single component."""
    return permutation(braid).is_single_cycle()


def require_knot(braid: BraidWord) -> None:
    """Raise NotAKnotError unless the closure is a knot."""
    cycles = permutation(braid).cycles()
    if len(cycles) != 1:
        raise NotAKnotError(len(cycles))


def winding_number(braid: BraidWord) -> int:
    """Winding number of the braid in the solid torus.

    Every intersection with a fiber disk is positively transverse, so the algebraic
    count equals the number of strands.
    """
    require_knot(braid)
    return braid.strands
