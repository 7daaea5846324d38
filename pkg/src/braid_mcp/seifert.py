"""Seifert matrix of the Seifert-algorithm surface of a braid closure.

The closure of a braid on n strands has n nested Seifert circles joined by one
twisted band per letter. Each pair of consecutive bands between the same two
circles carries a homology generator; linking numbers between push-offs follow
J. Collins, "An algorithm for computing the Seifert matrix of a link from a
braid representation" (2007), read directly off the word instead of a diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import Poly, ZZ
from sympy.polys.matrices import DomainMatrix

from braid_mcp.braid import BraidWord, require_knot
from braid_mcp.laurent import T, LaurentPolynomial

RING = ZZ[T]


@dataclass(frozen=True)
class _Generator:
    """Loop through two consecutive bands ``start`` < ``end`` on one generator index."""

    start: int
    end: int
    start_negative: bool
    end_negative: bool


def _homology_generators(braid: BraidWord) -> list[list[_Generator]]:
    by_index: list[list[tuple[int, bool]]] = [[] for _ in range(braid.strands - 1)]
    for position, letter in enumerate(braid.letters):
        by_index[abs(letter) - 1].append((position, letter < 0))
    return [
        [_Generator(a[0], b[0], a[1], b[1]) for a, b in zip(bands, bands[1:])]
        for bands in by_index
    ]


def seifert_matrix(braid: BraidWord) -> list[list[int]]:
    """Integer Seifert matrix of the closure, one row per homology generator."""
    require_knot(braid)
    groups = _homology_generators(braid)
    index = {}
    for n, group in enumerate(groups):
        for m in range(len(group)):
            index[(n, m)] = len(index)
    size = len(index)
    matrix = [[0] * size for _ in range(size)]

    for n, group in enumerate(groups):
        for m, gen in enumerate(group):
            # diagonal: both bands of the same handedness
            if gen.start_negative == gen.end_negative:
                matrix[index[(n, m)]][index[(n, m)]] = 1 if gen.start_negative else -1

        # consecutive generators sharing a band
        for m, gen in enumerate(group[:-1]):
            if not gen.end_negative:
                matrix[index[(n, m + 1)]][index[(n, m)]] = 1
            else:
                matrix[index[(n, m)]][index[(n, m + 1)]] = -1

        # staggered generators on neighbouring indices
        if n + 1 < len(groups):
            for m, gen in enumerate(group):
                for k, other in enumerate(groups[n + 1]):
                    if other.start < gen.start < other.end < gen.end:
                        matrix[index[(n + 1, k)]][index[(n, m)]] = 1
                    elif gen.start < other.start < gen.end < other.end:
                        matrix[index[(n + 1, k)]][index[(n, m)]] = -1
    return matrix


def seifert_alexander(braid: BraidWord) -> LaurentPolynomial:
    """Normalized det(V - t V^T); agrees with the Alexander polynomial up to units."""
    matrix = seifert_matrix(braid)
    size = len(matrix)
    if size == 0:
        return LaurentPolynomial.one()
    t = RING.from_sympy(T)
    rows = [[RING.convert(matrix[i][j]) - t * RING.convert(matrix[j][i]) for j in range(size)] for i in range(size)]
    determinant = DomainMatrix(rows, (size, size), RING).det()
    return LaurentPolynomial.from_poly(Poly(RING.to_sympy(determinant), T, domain=ZZ)).normalized()
