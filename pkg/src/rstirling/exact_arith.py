"""Exact integer and rational arithmetic.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
keeps itself in lowest terms with a positive denominator, so ``Rational`` is
simply an alias.  The functions here pin down the conventions the rest of the
package relies on (out-of-range binomials are zero, domain errors are raised
for negative arguments) and the text format used on the command line.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
Value = Union[int, Fraction]

__all__ = [
    "DomainError",
    "ConsistencyError",
    "Rational",
    "rat_normalize",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_inv",
    "binomial",
    "factorial",
    "format_value",
    "parse_rational",
    "parse_integer",
]


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ConsistencyError(ArithmeticError):
    """Two computations that must agree did not; indicates a bug."""


def rat_normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/0")
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_neg(a: Fraction) -> Fraction:
    return -a


def rat_inv(a: Fraction) -> Fraction:
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / Fraction(a)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial needs n >= 0, got n={n}")
    return math.factorial(n)


_RATIONAL_RE = re.compile(r"([+-]?)(\d+)(?:/(\d+))?")
_INTEGER_RE = re.compile(r"[+-]?\d+")


def format_value(value: Value) -> str:
    """Canonical text for an exact value: ``"p/q"``, or plain decimal when q = 1."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"not an exact value: {value!r}")
    return str(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]`` with a positive denominator.

    >>> parse_rational("-691/2730")
    Fraction(-691, 2730)
    >>> parse_rational("4/6")
    Fraction(2, 3)
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def parse_integer(text: str) -> int:
    if _INTEGER_RE.fullmatch(text) is None:
        raise ValueError(f"malformed integer: {text!r}")
    return int(text)
