"""Integer Laurent polynomials in one variable ``t``.

Arithmetic happens in SymPy's polynomial ring ZZ[t]; this type only carries the
result, its normal form and its text rendering.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, Symbol

T = Symbol("t")


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sparse Laurent polynomial: sorted ``(exponent, coefficient)`` pairs, no zero coefficients."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, int]) -> LaurentPolynomial:
        return cls(tuple(sorted((exp, coeff) for exp, coeff in coefficients.items() if coeff != 0)))

    @classmethod
    def from_poly(cls, poly: Poly, shift: int = 0) -> LaurentPolynomial:
        """Convert a SymPy polynomial in ``t``, multiplying by ``t**shift``."""
        return cls.from_dict({monom[0] + shift: int(coeff) for monom, coeff in poly.terms()})

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls(((0, 1),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def high(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    @property
    def span(self) -> int:
        """Difference between the highest and the lowest exponent."""
        return self.high - self.low

    def normalized(self) -> LaurentPolynomial:
        """Multiply by ±t^k so the lowest exponent is 0 and the leading coefficient is positive."""
        if not self.terms:
            return self
        sign = 1 if self.terms[-1][1] > 0 else -1
        return LaurentPolynomial(tuple((exp - self.low, sign * coeff) for exp, coeff in self.terms))

    def evaluate(self, value: int | Fraction) -> Fraction:
        return sum((Fraction(coeff) * Fraction(value) ** exp for exp, coeff in self.terms), Fraction(0))

    def is_palindromic(self) -> bool:
        coefficients = self.normalized().as_dict()
        return all(coefficients.get(self.span - exp, 0) == coeff for exp, coeff in coefficients.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = ""
        for exp, coeff in self.terms:
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "t" if exp == 1 else f"t^{exp}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if coeff < 0:
                text += "-" + body
            else:
                text += ("+" if text else "") + body
        return text
