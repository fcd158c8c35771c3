"""Truncated power series over the rationals.

A series of order N stores the ordinary coefficients ``c_0..c_N`` of
``sum c_n t^n``; the exponential-generating-function coefficient is
``a_n = n! c_n`` and is only produced on extraction (:meth:`EgfSeries.egf`).
Binary operations truncate to the smaller order of their operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import DomainError, factorial
from .fubini import fubini_antiderivative

__all__ = [
    "EgfSeries",
    "IdentityReport",
    "one",
    "zero",
    "variable",
    "ps_add",
    "ps_sub",
    "ps_mul",
    "ps_scale",
    "ps_neg",
    "ps_inverse",
    "ps_exp",
    "ps_log",
    "ps_divide_by_t",
    "exp_rt",
    "exp_minus_one",
    "bernoulli_poly_egf",
    "fubini_egf",
    "integrated_identity_lhs",
    "integrated_identity_rhs",
    "compare_egf",
    "integrated_identity_check",
]


@dataclass(frozen=True)
class EgfSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[int | Fraction]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise DomainError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_egf(cls, values: Sequence[int | Fraction]) -> EgfSeries:
        """Build ``sum a_n t^n / n!`` from its EGF coefficients ``a_n``."""
        return cls(Fraction(a) / factorial(n) for n, a in enumerate(values))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def egf(self, n: int) -> Fraction:
        """EGF coefficient ``n! c_n``."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return self.coeffs[n] * factorial(n)

    def egf_coefficients(self) -> list[Fraction]:
        return [self.egf(n) for n in range(self.order + 1)]

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise DomainError(f"cannot raise order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def __add__(self, other: EgfSeries) -> EgfSeries:
        return ps_add(self, other)

    def __sub__(self, other: EgfSeries) -> EgfSeries:
        return ps_sub(self, other)

    def __mul__(self, other: EgfSeries | int | Fraction) -> EgfSeries:
        if isinstance(other, EgfSeries):
            return ps_mul(self, other)
        return ps_scale(self, Fraction(other))

    __rmul__ = __mul__

    def __neg__(self) -> EgfSeries:
        return ps_neg(self)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a coefficient-wise series comparison.

    ``mismatch`` is ``(n, lhs_egf_coeff, rhs_egf_coeff)`` for the first
    disagreeing index, or ``None`` when every coefficient matched.
    """

    ok: bool
    order: int
    mismatch: tuple[int, Fraction, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.ok


def one(order: int) -> EgfSeries:
    return EgfSeries([1] + [0] * order)


def zero(order: int) -> EgfSeries:
    return EgfSeries([0] * (order + 1))


def variable(order: int) -> EgfSeries:
    """The series ``t``."""
    return EgfSeries(([0, 1] + [0] * order)[: order + 1])


def ps_add(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    return EgfSeries(x + y for x, y in zip(a.coeffs, b.coeffs))


def ps_sub(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    return EgfSeries(x - y for x, y in zip(a.coeffs, b.coeffs))


def ps_scale(a: EgfSeries, lam: int | Fraction) -> EgfSeries:
    return EgfSeries(lam * c for c in a.coeffs)


def ps_neg(a: EgfSeries) -> EgfSeries:
    return EgfSeries(-c for c in a.coeffs)


def ps_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return EgfSeries(
        sum((ac[i] * bc[m - i] for i in range(m + 1)), Fraction(0)) for m in range(n + 1)
    )


def ps_inverse(a: EgfSeries) -> EgfSeries:
    c = a.coeffs
    if c[0] == 0:
        raise DomainError("series with zero constant term is not invertible")
    inv0 = 1 / c[0]
    out = [inv0]
    for m in range(1, a.order + 1):
        acc = sum((c[i] * out[m - i] for i in range(1, m + 1)), Fraction(0))
        out.append(-acc * inv0)
    return EgfSeries(out)


def ps_exp(a: EgfSeries) -> EgfSeries:
    # b = exp(a) satisfies b' = a' b, i.e. m b_m = sum_{k=1}^{m} k a_k b_{m-k}
    c = a.coeffs
    if c[0] != 0:
        raise DomainError("exp needs a zero constant term")
    out = [Fraction(1)]
    for m in range(1, a.order + 1):
        acc = sum((k * c[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
        out.append(acc / m)
    return EgfSeries(out)


def ps_log(b: EgfSeries) -> EgfSeries:
    # a = log(b), b_0 = 1: m a_m = m b_m - sum_{k=1}^{m-1} k a_k b_{m-k}
    c = b.coeffs
    if c[0] != 1:
        raise DomainError("log needs constant term 1")
    out = [Fraction(0)]
    for m in range(1, b.order + 1):
        acc = sum((k * out[k] * c[m - k] for k in range(1, m)), Fraction(0))
        out.append(c[m] - acc / m)
    return EgfSeries(out)


def ps_divide_by_t(a: EgfSeries) -> EgfSeries:
    if a.coeffs[0] != 0:
        raise DomainError("division by t needs a zero constant term")
    if a.order == 0:
        raise DomainError("division by t of an order-0 series leaves no coefficients")
    return EgfSeries(a.coeffs[1:])


def exp_rt(r: int | Fraction, order: int) -> EgfSeries:
    """``e^(r t)`` with coefficients ``r^n / n!``."""
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    return EgfSeries(Fraction(r) ** n / factorial(n) for n in range(order + 1))


def exp_minus_one(order: int) -> EgfSeries:
    """``e^t - 1``."""
    return exp_rt(1, order) - one(order)


def bernoulli_poly_egf(r: int, order: int) -> EgfSeries:
    """``t e^(r t) / (e^t - 1)``; EGF coefficient n is ``B_n(r)``."""
    shifted = ps_divide_by_t(exp_minus_one(order + 1))
    return exp_rt(r, order) * ps_inverse(shifted)


def fubini_egf(x: int | Fraction, r: int, order: int) -> EgfSeries:
    """``e^(r t) / (1 - x (e^t - 1))``; EGF coefficient n is ``F_{n,r}(x)``."""
    denom = one(order) - exp_minus_one(order) * Fraction(x)
    return exp_rt(r, order) * ps_inverse(denom)


def integrated_identity_lhs(s: int | Fraction, r: int, order: int) -> EgfSeries:
    """EGF whose n-th coefficient is the integral of ``F_{n,r}`` over ``[0, s]``."""
    return EgfSeries.from_egf([fubini_antiderivative(n, r)(s) for n in range(order + 1)])


def integrated_identity_rhs(s: int | Fraction, r: int, order: int) -> EgfSeries:
    """``-e^(r t) ln(1 + s - s e^t) / (e^t - 1)``, formed as ``(ln(.)/t) * (t/(e^t-1))``."""
    s = Fraction(s)
    inner = one(order + 1) - exp_minus_one(order + 1) * s
    log_over_t = ps_divide_by_t(ps_log(inner))
    t_over_expm1 = ps_inverse(ps_divide_by_t(exp_minus_one(order + 1)))
    return -(exp_rt(r, order) * (log_over_t * t_over_expm1))


def compare_egf(lhs: EgfSeries, rhs: EgfSeries) -> IdentityReport:
    order = min(lhs.order, rhs.order)
    for n in range(order + 1):
        a, b = lhs.egf(n), rhs.egf(n)
        if a != b:
            return IdentityReport(False, order, (n, a, b))
    return IdentityReport(True, order)


def integrated_identity_check(s: int | Fraction, r: int, order: int) -> IdentityReport:
    """Compare both sides of the integrated Fubini identity through order N."""
    return compare_egf(integrated_identity_lhs(s, r, order), integrated_identity_rhs(s, r, order))
