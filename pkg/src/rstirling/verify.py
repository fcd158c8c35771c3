"""Cross-path verification suite behind ``rstirling verify``.

Each check is a generator of ``(indices, left, right)`` triples; the runner
counts cases and keeps the first triple whose sides differ.  Results are
reported sorted by identity name so output is stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import bernoulli as bern
from . import egf
from .exact_arith import binomial, factorial, format_value, parse_rational
from .fubini import fubini_antiderivative, fubini_poly, ordered_bell
from .oracles import (
    count_ordered_partitions,
    count_r_partitions,
    ordered_bell_recurrence,
)
from .stirling import (
    StirlingTriangle,
    r_stirling_explicit,
    r_stirling_recurrence,
    stirling2_explicit,
    triangle_build,
)

Case = tuple[dict, object, object]
TriangleBuilder = Callable[[int, int], StirlingTriangle]

DEFAULT_S_VALUES = (Fraction(-1), Fraction(1, 2), Fraction(2))


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 40
    max_r: int = 8
    egf_order: int = 32
    s_values: Sequence[Fraction] = DEFAULT_S_VALUES
    triangle_builder: TriangleBuilder = field(default=triangle_build, compare=False)


@dataclass(frozen=True)
class Mismatch:
    identity: str
    indices: dict
    left: object
    right: object

    def describe(self) -> str:
        idx = " ".join(f"{k}={_fmt(v)}" for k, v in self.indices.items())
        return f"{self.identity} [{idx}] left={_fmt(self.left)} right={_fmt(self.right)}"


@dataclass(frozen=True)
class CheckResult:
    identity: str
    cases: int
    mismatch: Mismatch | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def _fmt(v) -> str:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return format_value(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    return str(v)


# -- exact_arith ---------------------------------------------------------------


def _arith_round_trip(cfg: VerifyConfig) -> Iterator[Case]:
    for n, b in enumerate(bern.bernoulli_numbers_recurrence(cfg.max_n).values):
        yield {"n": n}, parse_rational(format_value(b)), b


def _arith_pascal(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(1, cfg.max_n + 1):
        for k in range(1, n):
            yield {"n": n, "k": k}, binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)
        yield {"n": n}, factorial(n), n * factorial(n - 1)


# -- stirling ------------------------------------------------------------------


def _stirling_path_equivalence(cfg: VerifyConfig) -> Iterator[Case]:
    for r in range(cfg.max_r + 1):
        tri = cfg.triangle_builder(r, r + cfg.max_n)
        for n in range(r, r + cfg.max_n + 1):
            for k in range(n + 1):
                expected = r_stirling_explicit(n - r, k - r, r) if k >= r else 0
                yield {"r": r, "n": n, "k": k}, tri[n, k], expected


def _stirling_recurrence_lookup(cfg: VerifyConfig) -> Iterator[Case]:
    for r in range(cfg.max_r + 1):
        for n in range(r, r + cfg.max_n + 1):
            for k in range(r, n + 1):
                left = r_stirling_recurrence(n, k, r)
                yield {"r": r, "n": n, "k": k}, left, r_stirling_explicit(n - r, k - r, r)


def _stirling_r0(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(cfg.max_n + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, r_stirling_explicit(n, k, 0), stirling2_explicit(n, k)


def _stirling_enumeration(cfg: VerifyConfig) -> Iterator[Case]:
    for r in range(min(3, cfg.max_r) + 1):
        for n in range(r, min(8, r + cfg.max_n) + 1):
            for k in range(n + 1):
                yield {"r": r, "n": n, "k": k}, r_stirling_recurrence(n, k, r), count_r_partitions(n, k, r)


# -- bernoulli -----------------------------------------------------------------


def _bernoulli_tables(cfg: VerifyConfig) -> Iterator[Case]:
    a = bern.bernoulli_numbers_stirling(cfg.max_n)
    b = bern.bernoulli_numbers_recurrence(cfg.max_n)
    for n in range(cfg.max_n + 1):
        yield {"n": n}, a[n], b[n]
    yield {"n": 0}, a[0], Fraction(1)
    if cfg.max_n >= 1:
        yield {"n": 1}, a[1], Fraction(-1, 2)
    for n in range(3, cfg.max_n + 1, 2):
        yield {"n": n}, a[n], Fraction(0)


def _bernoulli_r0_summands(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(cfg.max_n + 1):
        yield {"n": n}, bern.r_stirling_summands(n, 0), bern.stirling_summands(n)


def _bernoulli_triple(cfg: VerifyConfig) -> Iterator[Case]:
    polys = [bern.bernoulli_polynomial_coeffs(n) for n in range(cfg.max_n + 1)]
    for r in range(cfg.max_r + 1):
        series = egf.bernoulli_poly_egf(r, cfg.max_n)
        for n in range(cfg.max_n + 1):
            value = bern.bernoulli_at_integer(n, r)
            recur = sum(bern.r_stirling_summands(n, r, method="recurrence"), Fraction(0))
            yield {"n": n, "r": r, "path": "recurrence"}, value, recur
            yield {"n": n, "r": r, "path": "polynomial"}, value, bern.evaluate_poly(polys[n], r)
            yield {"n": n, "r": r, "path": "egf"}, value, series.egf(n)


def _bernoulli_forward_difference(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(1, cfg.max_n + 1):
        for r in range(cfg.max_r + 1):
            diff = bern.bernoulli_at_integer(n, r + 1) - bern.bernoulli_at_integer(n, r)
            yield {"n": n, "r": r}, diff, n * r ** (n - 1)


# -- fubini --------------------------------------------------------------------


def _fubini_derivative(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(cfg.max_n + 1):
        for r in range(cfg.max_r + 1):
            anti = fubini_antiderivative(n, r)
            yield {"n": n, "r": r}, anti.derivative(), fubini_poly(n, r).poly
            yield {"n": n, "r": r, "at": 0}, anti(0), Fraction(0)


def _fubini_s_minus_one(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(cfg.max_n + 1):
        for r in range(cfg.max_r + 1):
            yield {"n": n, "r": r}, -fubini_antiderivative(n, r)(-1), bern.bernoulli_at_integer(n, r)


def _fubini_egf_match(cfg: VerifyConfig) -> Iterator[Case]:
    for x in (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)):
        for r in range(cfg.max_r + 1):
            series = egf.fubini_egf(x, r, cfg.egf_order)
            for n in range(cfg.egf_order + 1):
                yield {"x": x, "r": r, "n": n}, series.egf(n), fubini_poly(n, r)(x)


def _fubini_ordered_bell(cfg: VerifyConfig) -> Iterator[Case]:
    for n in range(cfg.max_n + 1):
        yield {"n": n, "oracle": "recurrence"}, ordered_bell(n), ordered_bell_recurrence(n)
    for n in range(min(5, cfg.max_n) + 1):
        yield {"n": n, "oracle": "enumeration"}, ordered_bell(n), count_ordered_partitions(n)


# -- egf -----------------------------------------------------------------------


def _random_series(rng: random.Random, order: int, c0: int) -> egf.EgfSeries:
    return egf.EgfSeries([c0] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order)])


def _egf_ring(cfg: VerifyConfig) -> Iterator[Case]:
    rng = random.Random(20130501)
    order = cfg.egf_order
    for trial in range(3):
        a = _random_series(rng, order, 0)
        b = _random_series(rng, order, 1)
        c = _random_series(rng, order, rng.randint(1, 5))
        yield {"trial": trial, "law": "log_exp"}, egf.ps_log(egf.ps_exp(a)).coeffs, a.coeffs
        yield {"trial": trial, "law": "exp_log"}, egf.ps_exp(egf.ps_log(b)).coeffs, b.coeffs
        yield {"trial": trial, "law": "inverse"}, (c * egf.ps_inverse(c)).coeffs, egf.one(order).coeffs
        yield {"trial": trial, "law": "commutative"}, (a * c).coeffs, (c * a).coeffs
        yield {"trial": trial, "law": "associative"}, ((a * b) * c).coeffs, (a * (b * c)).coeffs
    if order >= 1:
        t_plus_t2 = egf.variable(order) + egf.variable(order) * egf.variable(order)
        expected = egf.one(order - 1) + (egf.variable(order - 1) if order >= 2 else egf.zero(0))
        yield {"law": "divide_by_t"}, egf.ps_divide_by_t(t_plus_t2).coeffs, expected.coeffs


def _egf_r_stirling_columns(cfg: VerifyConfig) -> Iterator[Case]:
    order = cfg.egf_order
    expm1 = egf.exp_minus_one(order)
    for r in range(cfg.max_r + 1):
        power = egf.exp_rt(r, order)
        for k in range(min(8, order) + 1):
            if k:
                power = power * expm1
            scaled = egf.ps_scale(power, Fraction(1, factorial(k)))
            for n in range(order + 1):
                yield {"r": r, "k": k, "n": n}, scaled.egf(n), r_stirling_explicit(n, k, r)


def _egf_integrated(cfg: VerifyConfig) -> Iterator[Case]:
    for s in cfg.s_values:
        for r in range(cfg.max_r + 1):
            lhs = egf.integrated_identity_lhs(s, r, cfg.egf_order)
            rhs = egf.integrated_identity_rhs(s, r, cfg.egf_order)
            for n in range(cfg.egf_order + 1):
                yield {"s": s, "r": r, "n": n}, lhs.egf(n), rhs.egf(n)


def _egf_s_minus_one(cfg: VerifyConfig) -> Iterator[Case]:
    for r in range(cfg.max_r + 1):
        rhs = egf.integrated_identity_rhs(-1, r, cfg.egf_order)
        bp = egf.bernoulli_poly_egf(r, cfg.egf_order)
        for n in range(cfg.egf_order + 1):
            yield {"r": r, "n": n}, rhs.egf(n), -bp.egf(n)


CHECKS: dict[str, Callable[[VerifyConfig], Iterator[Case]]] = {
    "exact_arith.pascal_factorial": _arith_pascal,
    "exact_arith.round_trip": _arith_round_trip,
    "stirling.path_equivalence": _stirling_path_equivalence,
    "stirling.recurrence_vs_explicit": _stirling_recurrence_lookup,
    "stirling.r0_reduces_to_s": _stirling_r0,
    "stirling.enumeration": _stirling_enumeration,
    "bernoulli.tables_agree": _bernoulli_tables,
    "bernoulli.r0_summands": _bernoulli_r0_summands,
    "bernoulli.triple_agreement": _bernoulli_triple,
    "bernoulli.forward_difference": _bernoulli_forward_difference,
    "fubini.antiderivative": _fubini_derivative,
    "fubini.s_minus_one": _fubini_s_minus_one,
    "fubini.egf_match": _fubini_egf_match,
    "fubini.ordered_bell": _fubini_ordered_bell,
    "egf.ring_laws": _egf_ring,
    "egf.r_stirling_columns": _egf_r_stirling_columns,
    "egf.integrated_identity": _egf_integrated,
    "egf.s_minus_one_bernoulli": _egf_s_minus_one,
}


def run_check(name: str, cfg: VerifyConfig) -> CheckResult:
    cases = 0
    for indices, left, right in CHECKS[name](cfg):
        cases += 1
        if left != right:
            return CheckResult(name, cases, Mismatch(name, indices, left, right))
    return CheckResult(name, cases, None)


def run_verification(cfg: VerifyConfig | None = None, **kwargs) -> list[CheckResult]:
    """Run every registered check; results are sorted by identity name."""
    if cfg is None:
        cfg = VerifyConfig(**kwargs)
    return [run_check(name, cfg) for name in sorted(CHECKS)]


def format_report(results: list[CheckResult]) -> list[str]:
    lines = []
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"{status} {res.identity} cases={res.cases}")
    failed = [r for r in results if not r.ok]
    if failed:
        lines.append(f"first mismatch: {failed[0].mismatch.describe()}")
        lines.append(f"verify: FAILED ({len(failed)} of {len(results)} identities)")
    else:
        lines.append(f"verify: OK ({len(results)} identities)")
    return lines
