"""Exact Bernoulli polynomial values at non-negative integers via r-Stirling numbers."""

from .bernoulli import (
    BernoulliTable,
    bernoulli_at_integer,
    bernoulli_numbers_recurrence,
    bernoulli_numbers_stirling,
    bernoulli_polynomial_coeffs,
)
from .exact_arith import ConsistencyError, DomainError, Rational, format_value, parse_rational
from .fubini import FubiniPolynomial, fubini_antiderivative, fubini_poly, ordered_bell
from .polynomial import PolynomialQ, evaluate_poly
from .stirling import (
    StirlingTriangle,
    r_stirling_explicit,
    r_stirling_recurrence,
    stirling2_explicit,
    triangle_build,
)

__all__ = [
    "BernoulliTable",
    "ConsistencyError",
    "DomainError",
    "FubiniPolynomial",
    "PolynomialQ",
    "Rational",
    "StirlingTriangle",
    "bernoulli_at_integer",
    "bernoulli_numbers_recurrence",
    "bernoulli_numbers_stirling",
    "bernoulli_polynomial_coeffs",
    "evaluate_poly",
    "format_value",
    "fubini_antiderivative",
    "fubini_poly",
    "ordered_bell",
    "parse_rational",
    "r_stirling_explicit",
    "r_stirling_recurrence",
    "stirling2_explicit",
    "triangle_build",
]
