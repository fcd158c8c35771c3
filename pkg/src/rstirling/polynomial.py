"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = ["PolynomialQ", "evaluate_poly"]


@dataclass(frozen=True)
class PolynomialQ:
    """Coefficients in ascending degree; trailing zeros are trimmed.

    The zero polynomial is stored as ``(0,)``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[int | Fraction]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x: int | Fraction) -> Fraction:
        return evaluate_poly(self, x)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def derivative(self) -> PolynomialQ:
        return PolynomialQ(i * c for i, c in enumerate(self.coeffs) if i)

    def antiderivative(self) -> PolynomialQ:
        """The antiderivative vanishing at 0."""
        return PolynomialQ([0, *(c / (i + 1) for i, c in enumerate(self.coeffs))])

    def __str__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def evaluate_poly(p: PolynomialQ, x: int | Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
