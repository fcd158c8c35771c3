"""Bernoulli numbers and Bernoulli polynomial values at non-negative integers.

The central routine is :func:`bernoulli_at_integer`, which evaluates

    B_n(r) = sum_{k=0}^{n} (-1)^k k!/(k+1) S_r(n+r, k+r)

for integers ``n, r >= 0``.  At ``r = 0`` this is the classical Stirling
formula for ``B_n``.  The binomial recurrence and the expansion
``B_n(x) = sum_k C(n, k) B_k x^(n-k)`` use no Stirling numbers at all and
serve as independent checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import ConsistencyError, DomainError, binomial, factorial
from .polynomial import PolynomialQ, evaluate_poly
from .stirling import r_stirling_explicit, r_stirling_recurrence, stirling2_explicit

__all__ = [
    "BernoulliTable",
    "bernoulli_numbers_stirling",
    "bernoulli_numbers_recurrence",
    "bernoulli_at_integer",
    "stirling_summands",
    "r_stirling_summands",
    "bernoulli_polynomial_coeffs",
    "evaluate_poly",
]


@dataclass(frozen=True)
class BernoulliTable:
    n_max: int
    values: tuple[Fraction, ...]
    provenance: str

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _weight(k: int) -> Fraction:
    # (-1)^k k!/(k+1)
    return Fraction((-1) ** k * factorial(k), k + 1)


def _check_non_negative(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if v < 0:
            raise DomainError(f"{name} must be >= 0, got {v}")


def stirling_summands(n: int) -> list[Fraction]:
    """Terms ``(-1)^k k!/(k+1) S(n, k)`` for ``k = 0..n``."""
    _check_non_negative(n=n)
    return [_weight(k) * stirling2_explicit(n, k) for k in range(n + 1)]


def r_stirling_summands(n: int, r: int, method: str = "explicit") -> list[Fraction]:
    """Terms ``(-1)^k k!/(k+1) S_r(n+r, k+r)`` for ``k = 0..n``.

    ``method`` selects the r-Stirling route: ``"explicit"`` (binomial sum) or
    ``"recurrence"`` (triangle).
    """
    _check_non_negative(n=n, r=r)
    if method == "explicit":
        s = [r_stirling_explicit(n, k, r) for k in range(n + 1)]
    elif method == "recurrence":
        s = [r_stirling_recurrence(n + r, k + r, r) for k in range(n + 1)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return [_weight(k) * v for k, v in enumerate(s)]


def bernoulli_at_integer(n: int, r: int, verify: bool = False) -> Fraction:
    """``B_n(r)`` via r-Stirling numbers.

    With ``verify=True`` the sum is recomputed from the recurrence triangle
    and a :class:`ConsistencyError` is raised if the two disagree.
    """
    value = sum(r_stirling_summands(n, r), Fraction(0))
    if verify:
        other = sum(r_stirling_summands(n, r, method="recurrence"), Fraction(0))
        if other != value:
            raise ConsistencyError(f"B_{n}({r}): explicit {value} != recurrence {other}")
    return value


def bernoulli_numbers_stirling(n_max: int) -> BernoulliTable:
    _check_non_negative(n_max=n_max)
    values = tuple(sum(stirling_summands(n), Fraction(0)) for n in range(n_max + 1))
    return BernoulliTable(n_max, values, "stirling")


def bernoulli_numbers_recurrence(n_max: int) -> BernoulliTable:
    """Solve ``sum_{k=0}^{n} C(n+1, k) B_k = 0`` successively for ``B_n``."""
    _check_non_negative(n_max=n_max)
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = sum((binomial(n + 1, k) * b[k] for k in range(n)), Fraction(0))
        b.append(-acc / (n + 1))
    return BernoulliTable(n_max, tuple(b), "recurrence")


def bernoulli_polynomial_coeffs(n: int) -> PolynomialQ:
    """``B_n(x)`` in ascending powers of x."""
    _check_non_negative(n=n)
    b = bernoulli_numbers_recurrence(n).values
    # coefficient of x^(n-k) is C(n, k) B_k
    return PolynomialQ(binomial(n, n - i) * b[n - i] for i in range(n + 1))
