"""Fubini-type polynomials ``F_{n,r}(x) = sum_k k! S_r(n+r, k+r) x^k``."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import ConsistencyError, DomainError, factorial
from .polynomial import PolynomialQ
from .stirling import r_stirling_explicit

__all__ = ["FubiniPolynomial", "fubini_poly", "fubini_antiderivative", "ordered_bell"]


@dataclass(frozen=True)
class FubiniPolynomial:
    n: int
    r: int
    poly: PolynomialQ

    def __post_init__(self):
        cs = self.poly.coeffs
        if any(c.denominator != 1 or c < 0 for c in cs):
            raise ConsistencyError(f"F_{self.n},{self.r} has a non-natural coefficient")
        if self.poly.degree != self.n or cs[-1] != factorial(self.n):
            raise ConsistencyError(f"F_{self.n},{self.r} must have degree n and leading n!")
        if cs[0] != self.r**self.n:
            raise ConsistencyError(f"F_{self.n},{self.r}(0) must equal r^n")

    def __call__(self, x):
        return self.poly(x)


def fubini_poly(n: int, r: int) -> FubiniPolynomial:
    if n < 0 or r < 0:
        raise DomainError(f"F_(n,r) needs n, r >= 0, got ({n}, {r})")
    coeffs = [factorial(k) * r_stirling_explicit(n, k, r) for k in range(n + 1)]
    return FubiniPolynomial(n, r, PolynomialQ(coeffs))


def fubini_antiderivative(n: int, r: int) -> PolynomialQ:
    """``s -> sum_k k!/(k+1) S_r(n+r, k+r) s^(k+1)``, the integral of F over [0, s]."""
    return fubini_poly(n, r).poly.antiderivative()


def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an n-set, ``F_{n,0}(1)``."""
    value = fubini_poly(n, 0)(1)
    return value.numerator
