"""Exact SL(2, Z) algebra on H_1(T^2) in the basis xi = [S^1 x pt], eta = [pt x S^1].

Matrices act on column vectors from the left, so ``compose(a, b)`` applies ``b`` first.
The intersection form is fixed by I(xi, eta) = +1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from slope_calc.errors import InternalInvariantError, InvalidInputError, ParseError

Rational = int | Fraction


@dataclass(frozen=True)
class HomologyClass:
    """A class x*xi + y*eta in H_1(T^2; R) with rational coordinates."""

    x: Rational
    y: Rational

    def __add__(self, other: HomologyClass) -> HomologyClass:
        return HomologyClass(self.x + other.x, self.y + other.y)

    def scale(self, factor: Rational) -> HomologyClass:
        return HomologyClass(factor * self.x, factor * self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


@dataclass(frozen=True, order=True)
class Slope:
    """A primitive class (x, y), canonically signed: x > 0, or x == 0 and y == 1."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if gcd(self.x, self.y) != 1:
            raise InvalidInputError(f"slope ({self.x}, {self.y}) is not primitive")
        if not (self.x > 0 or (self.x == 0 and self.y == 1)):
            raise InvalidInputError(f"slope ({self.x}, {self.y}) is not canonically signed")

    @classmethod
    def of(cls, x: int, y: int) -> Slope:
        """Canonical slope of the primitive pair ±(x, y)."""
        if gcd(x, y) != 1:
            raise InvalidInputError(f"({x}, {y}) is not a primitive class")
        if x < 0 or (x == 0 and y < 0):
            x, y = -x, -y
        return cls(x, y)

    def as_class(self) -> HomologyClass:
        return HomologyClass(self.x, self.y)

    def __str__(self) -> str:
        return f"{self.x}/{self.y}"


XI = Slope(1, 0)
ETA = Slope(0, 1)


@dataclass(frozen=True)
class MappingClass:
    """The matrix [[p, q], [r, s]] with ps - qr = 1."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.p * self.s - self.q * self.r != 1:
            raise InvalidInputError(f"{self} has determinant {self.p * self.s - self.q * self.r}, expected 1")

    @classmethod
    def identity(cls) -> MappingClass:
        return cls(1, 0, 0, 1)

    @property
    def trace(self) -> int:
        return self.p + self.s

    def inverse(self) -> MappingClass:
        return MappingClass(self.s, -self.q, -self.r, self.p)

    def power(self, exponent: int) -> MappingClass:
        base = self if exponent >= 0 else self.inverse()
        result = MappingClass.identity()
        for _ in range(abs(exponent)):
            result = compose(result, base)
        return result

    def act_on_class(self, alpha: HomologyClass) -> HomologyClass:
        return HomologyClass(self.p * alpha.x + self.q * alpha.y, self.r * alpha.x + self.s * alpha.y)

    def __str__(self) -> str:
        return f"{self.p} {self.q} {self.r} {self.s}"


def compose(a: MappingClass, b: MappingClass) -> MappingClass:
    """Matrix product a·b (apply b, then a)."""
    return MappingClass(
        a.p * b.p + a.q * b.r,
        a.p * b.q + a.q * b.s,
        a.r * b.p + a.s * b.r,
        a.r * b.q + a.s * b.s,
    )


def act_on_slope(tau: MappingClass, c: Slope) -> Slope:
    """Image of a slope under a mapping class, canonically signed."""
    image = tau.act_on_class(c.as_class())
    x, y = int(image.x), int(image.y)
    if gcd(x, y) != 1:
        raise InternalInvariantError(f"{tau} sent the primitive slope {c} to a non-primitive class")
    return Slope.of(x, y)


def intersection_form(alpha: HomologyClass, beta: HomologyClass) -> Rational:
    """Algebraic intersection number I(alpha, beta) = alpha_x beta_y - alpha_y beta_x."""
    return alpha.x * beta.y - alpha.y * beta.x


def dehn_twist(c: Slope) -> MappingClass:
    """The twist alpha -> alpha + I(c, alpha) c along the slope c."""
    x, y = c.x, c.y
    return MappingClass(1 - x * y, x * x, -y * y, 1 + x * y)


def torsion_order(tau: MappingClass) -> int | None:
    """Finite order of ``tau`` (one of 1, 2, 3, 4, 6), or None for infinite order."""
    # elliptic or central elements have |trace| < 2 or tau = ±I
    if abs(tau.trace) > 2:
        return None
    identity = MappingClass.identity()
    power = tau
    for order in range(1, 7):
        if power == identity:
            return order
        power = compose(power, tau)
    return None


def fixes_xi_up_to_sign(tau: MappingClass) -> bool:
    """True iff tau(xi) = ±xi, i.e. the lower-left entry r vanishes."""
    return tau.r == 0


PLUMBING = MappingClass(0, -1, 1, 0)


def is_plumbing(tau: MappingClass) -> bool:
    """True iff tau(xi) = eta and tau(eta) = -xi."""
    return tau == PLUMBING


def parse_mapping_class(text: str) -> MappingClass:
    """Parse the row-major text form ``"p q r s"``."""
    tokens = text.replace(",", " ").split()
    if len(tokens) != 4:
        raise ParseError(f"mapping class needs four integers 'p q r s', got '{text}'")
    try:
        p, q, r, s = (int(token) for token in tokens)
    except ValueError as exc:
        raise ParseError(f"mapping class entries must be integers, got '{text}'") from exc
    if p * s - q * r != 1:
        raise ParseError(f"matrix '{text}' has determinant {p * s - q * r}, not in SL(2,Z)")
    return MappingClass(p, q, r, s)


_SLOPE_RE = re.compile(r"^\s*(-?\d+)\s*(?:/|\s)\s*(-?\d+)\s*$")


def parse_slope(text: str) -> Slope:
    """Parse ``"x/y"`` or ``"x y"`` and return the canonical representative."""
    match = _SLOPE_RE.match(text)
    if not match:
        raise ParseError(f"slope must look like 'x/y' or 'x y', got '{text}'")
    x, y = int(match.group(1)), int(match.group(2))
    if gcd(x, y) != 1:
        raise ParseError(f"slope '{text}' is not a primitive class")
    return Slope.of(x, y)


def slopes_up_to(bound: int) -> list[Slope]:
    """Canonical primitive slopes with max(|x|, |y|) <= bound, ordered by (max, x, y)."""
    if bound < 1:
        raise InvalidInputError("N ≥ 1 required")
    slopes = [
        Slope.of(x, y)
        for x in range(0, bound + 1)
        for y in range(-bound, bound + 1)
        if gcd(x, y) == 1 and (x > 0 or y == 1)
    ]
    return sorted(slopes, key=lambda c: (max(abs(c.x), abs(c.y)), c.x, c.y))
