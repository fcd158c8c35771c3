"""Exit criteria.  Every comparison is exact rational equality."""

import csv
import io
import json
import time
from fractions import Fraction

import pytest

from rstirling.bernoulli import (
    bernoulli_at_integer,
    bernoulli_numbers_recurrence,
    bernoulli_numbers_stirling,
    bernoulli_polynomial_coeffs,
    r_stirling_summands,
    stirling_summands,
)
from rstirling.cli import main
from rstirling.egf import (
    bernoulli_poly_egf,
    exp_minus_one,
    exp_rt,
    integrated_identity_check,
    integrated_identity_rhs,
    ps_scale,
)
from rstirling.exact_arith import factorial, format_value, parse_rational
from rstirling.fubini import ordered_bell
from rstirling.oracles import count_r_partitions, ordered_bell_recurrence
from rstirling.polynomial import evaluate_poly
from rstirling.stirling import StirlingTriangle, r_stirling_explicit, triangle_build

from brute import ordered_partitions

pytestmark = pytest.mark.acceptance


def test_bernoulli_values_three_paths():
    start = time.perf_counter()
    polys = [bernoulli_polynomial_coeffs(n) for n in range(61)]
    for r in range(13):
        series = bernoulli_poly_egf(r, 60)
        for n in range(61):
            value = bernoulli_at_integer(n, r)
            assert value == evaluate_poly(polys[n], r), (n, r)
            assert value == series.egf(n), (n, r)
    assert time.perf_counter() - start < 30


def test_r0_reduces_to_classical_formula():
    for n in range(41):
        assert r_stirling_summands(n, 0) == stirling_summands(n), n
    a, b = bernoulli_numbers_stirling(60), bernoulli_numbers_recurrence(60)
    assert a.values == b.values
    assert a[12] == Fraction(-691, 2730)
    assert a[30] == Fraction(8615841276005, 14322)


def test_r_stirling_path_equivalence():
    start = time.perf_counter()
    for r in range(9):
        tri = triangle_build(r, r + 25)
        for n in range(r, r + 26):
            for k in range(n + 1):
                explicit = r_stirling_explicit(n - r, k - r, r) if k >= r else 0
                assert tri[n, k] == explicit, (r, n, k)
    for r in range(4):
        tri = triangle_build(r, max(r, 8))
        for n in range(r, 9):
            for k in range(n + 1):
                assert tri[n, k] == count_r_partitions(n, k, r), (r, n, k)
    assert time.perf_counter() - start < 10


def test_proof_machinery():
    start = time.perf_counter()
    for s in (Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3, 7)):
        for r in (0, 1, 2, 5):
            report = integrated_identity_check(s, r, 40)
            assert report, (s, r, report.mismatch)
    for r in (0, 1, 2, 5):
        assert integrated_identity_rhs(-1, r, 40) == -bernoulli_poly_egf(r, 40)
    assert time.perf_counter() - start < 20


def test_r_stirling_column_egf():
    expm1 = exp_minus_one(20)
    for r in range(5):
        power = exp_rt(r, 20)
        for k in range(9):
            if k:
                power = power * expm1
            coeffs = ps_scale(power, Fraction(1, factorial(k))).egf_coefficients()
            assert coeffs == [r_stirling_explicit(n, k, r) for n in range(21)], (r, k)


def test_ordered_bell_numbers():
    assert [ordered_bell(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    assert [ordered_partitions(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    assert [ordered_bell(n) for n in range(13)] == [ordered_bell_recurrence(n) for n in range(13)]


def test_forward_difference():
    for n in range(1, 31):
        for r in range(11):
            assert bernoulli_at_integer(n, r + 1) - bernoulli_at_integer(n, r) == n * r ** (n - 1)


def _corrupt(r, n_max):
    tri = triangle_build(r, n_max)
    if r != 1 or n_max < 4:
        return tri
    rows = [list(row) for row in tri.rows]
    rows[4 - r][2] -= 1
    return StirlingTriangle(r, n_max, tuple(map(tuple, rows)))


def test_cli():
    out = io.StringIO()
    assert main(["verify"], stdout=out) == 0

    out = io.StringIO()
    assert main(["verify"], stdout=out, triangle_builder=_corrupt) == 1
    assert "first mismatch: stirling.path_equivalence [r=1 n=4 k=2]" in out.getvalue()

    for cmd in (
        ["bernoulli", "--n-max", "25", "--r", "3"],
        ["stirling", "--n-max", "10", "--r", "2"],
        ["fubini", "--n", "6", "--r", "1", "--x=-3/7"],
        ["ordered-bell", "--n-max", "15"],
    ):
        js, cs = io.StringIO(), io.StringIO()
        main([*cmd, "--format", "json"], stdout=js)
        main([*cmd, "--format", "csv"], stdout=cs)
        json_vals = [json.loads(line)["value"] for line in js.getvalue().splitlines()]
        csv_vals = [row["value"] for row in csv.DictReader(io.StringIO(cs.getvalue()))]
        assert json_vals == csv_vals and json_vals
        for text in json_vals:
            assert format_value(parse_rational(text)) == text
