"""Classical-knot invariants of braid closures.

Alexander polynomial via the reduced Burau representation, the genus of the
Seifert-algorithm surface, and a genus estimate that is certified exact only when
the word is homogeneous or the two bounds meet.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from sympy import Poly, ZZ
from sympy.polys.matrices import DomainMatrix

from braid_mcp.braid import BraidWord, permutation, require_knot, winding_number
from braid_mcp.laurent import T, LaurentPolynomial
from slope_calc.errors import InternalInvariantError, InvalidInputError

logger = logging.getLogger("BraidInvariants")

RING = ZZ[T]


class GenusMethod(str, Enum):
    """How a genus estimate was obtained."""

    ALEXANDER_SPAN = "AlexanderSpan"
    SEIFERT_ALGORITHM = "SeifertAlgorithm"
    HOMOGENEOUS_BRAID = "HomogeneousBraid"
    BOUNDS_COINCIDE = "BoundsCoincide"
    USER_OVERRIDE = "UserOverride"


class Nontriviality(str, Enum):
    NONTRIVIAL = "Nontrivial"
    UNKNOWN = "Unknown"
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class GenusEstimate:
    """Integer interval containing the knot genus."""

    lower: int
    upper: int
    exact: bool
    method: GenusMethod

    def __post_init__(self) -> None:
        if self.lower < 0 or self.lower > self.upper:
            raise InvalidInputError(f"invalid genus interval [{self.lower}, {self.upper}]")
        if self.exact and self.lower != self.upper:
            raise InvalidInputError("an exact genus estimate needs lower == upper")

    @classmethod
    def override(cls, genus: int) -> GenusEstimate:
        """An exact, user-supplied genus."""
        if genus < 1:
            raise InvalidInputError(f"genus override must be a positive integer, got {genus}")
        return cls(genus, genus, True, GenusMethod.USER_OVERRIDE)

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact, "method": self.method.value}


def _diagonal(size: int, entry: object) -> DomainMatrix:
    # list-built so it shares the dense format of the Burau generators
    rows = [[entry if r == c else RING.zero for c in range(size)] for r in range(size)]
    return DomainMatrix(rows, (size, size), RING)


def _burau_generator(strands: int, letter: int) -> DomainMatrix:
    """Reduced Burau matrix of sigma_|letter|, multiplied by t when the letter is negative.

    Scaling keeps every entry polynomial; the scale only changes determinants by a unit.
    """
    size = strands - 1
    i = abs(letter) - 1
    t = RING.from_sympy(T)
    one, zero = RING.one, RING.zero
    rows = [[one if r == c else zero for c in range(size)] for r in range(size)]
    if letter > 0:
        rows[i][i] = -t
        if i > 0:
            rows[i - 1][i] = t
        if i < size - 1:
            rows[i + 1][i] = one
    else:
        rows[i][i] = -one
        if i > 0:
            rows[i - 1][i - 1] = t
            rows[i - 1][i] = t
        if i < size - 1:
            rows[i + 1][i] = one
            rows[i + 1][i + 1] = t
    return DomainMatrix(rows, (size, size), RING)


def alexander_polynomial(braid: BraidWord) -> LaurentPolynomial:
    """Normalized Alexander polynomial of the closure.

    With P = t^m * rho(b) for m negative letters, det(P - t^m I) equals
    det(rho(b) - I) up to a unit, and dividing by 1 + t + ... + t^(n-1) is exact.
    """
    require_knot(braid)
    strands = braid.strands
    if strands == 1:
        return LaurentPolynomial.one()
    size = strands - 1
    product = _diagonal(size, RING.one)
    for letter in braid.letters:
        product = product.matmul(_burau_generator(strands, letter))
    negatives = sum(1 for letter in braid.letters if letter < 0)
    shifted = _diagonal(size, RING.from_sympy(T**negatives))
    determinant = (product - shifted).det()

    numerator = Poly(RING.to_sympy(determinant), T, domain=ZZ)
    divisor = Poly(sum(T**k for k in range(strands)), T, domain=ZZ)
    quotient, remainder = numerator.div(divisor, auto=False)
    if not remainder.is_zero or quotient.is_zero:
        raise InternalInvariantError(f"Burau determinant of '{braid}' is not divisible by the cyclotomic factor")
    return LaurentPolynomial.from_poly(quotient).normalized()


def seifert_genus_upper(braid: BraidWord) -> int:
    """Genus (c - n + 1) / 2 of the Seifert-algorithm surface of the closure."""
    require_knot(braid)
    twice = len(braid) - braid.strands + 1
    if twice % 2:
        raise InternalInvariantError(f"odd Euler characteristic for knot closure of '{braid}'")
    return twice // 2


def knot_genus(braid: BraidWord) -> GenusEstimate:
    """Genus interval [span(Delta)/2, Seifert bound], exact for homogeneous words."""
    upper = seifert_genus_upper(braid)
    lower = alexander_polynomial(braid).span // 2
    if braid.is_homogeneous():
        return GenusEstimate(upper, upper, True, GenusMethod.HOMOGENEOUS_BRAID)
    if lower == upper:
        return GenusEstimate(lower, upper, True, GenusMethod.BOUNDS_COINCIDE)
    logger.debug("genus of '%s' only bounded: [%d, %d]", braid, lower, upper)
    method = GenusMethod.ALEXANDER_SPAN if lower > 0 else GenusMethod.SEIFERT_ALGORITHM
    return GenusEstimate(lower, upper, False, method)


def is_nontrivial_knot(braid: BraidWord) -> Nontriviality:
    """Decide nontriviality from the Alexander polynomial and the certified genus."""
    estimate = knot_genus(braid)
    if alexander_polynomial(braid) != LaurentPolynomial.one() or (estimate.exact and estimate.upper > 0):
        return Nontriviality.NONTRIVIAL
    if estimate.exact and estimate.upper == 0:
        return Nontriviality.TRIVIAL
    return Nontriviality.UNKNOWN


@dataclass(frozen=True)
class BraidReport:
    """Everything the ``braid`` command prints about one word."""

    braid: BraidWord
    cycles: tuple[tuple[int, ...], ...]
    winding_number: int
    alexander: LaurentPolynomial
    genus: GenusEstimate
    nontriviality: Nontriviality

    def to_dict(self) -> dict:
        nontrivial = {Nontriviality.NONTRIVIAL: True, Nontriviality.TRIVIAL: False}.get(self.nontriviality)
        return {
            "word": list(self.braid.letters),
            "strands": self.braid.strands,
            "permutation": [list(cycle) for cycle in self.cycles],
            "winding_number": self.winding_number,
            "alexander": str(self.alexander),
            "genus": self.genus.to_dict(),
            "nontriviality": self.nontriviality.value,
            "nontrivial": nontrivial,
        }


def braid_report(braid: BraidWord) -> BraidReport:
    return BraidReport(
        braid=braid,
        cycles=tuple(permutation(braid).cycles()),
        winding_number=winding_number(braid),
        alexander=alexander_polynomial(braid),
        genus=knot_genus(braid),
        nontriviality=is_nontrivial_knot(braid),
    )
