import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from rstirling.cli import main
from rstirling.exact_arith import format_value, parse_rational
from rstirling.stirling import StirlingTriangle, triangle_build


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def json_values(text):
    return [json.loads(line)["value"] for line in text.splitlines()]


def test_bernoulli_json():
    code, out = run("bernoulli", "--n-max", "2", "--r", "0")
    assert code == 0
    assert json_values(out) == ["1", "-1/2", "1/6"]
    first = json.loads(out.splitlines()[0])
    assert first == {"kind": "bernoulli_number", "indices": {"n": 0, "r": 0}, "value": "1"}


def test_bernoulli_other_r():
    assert json_values(run("bernoulli", "--n-max", "0", "--r", "7")[1]) == ["1"]
    assert json_values(run("bernoulli", "--n-max", "2", "--r", "3")[1])[-1] == "37/6"


def test_stirling_rows():
    _, out = run("stirling", "--n-max", "3", "--r", "0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["value"] for r in rows if r["n"] == "3"] == ["0", "1", "3", "1"]
    _, out = run("stirling", "--n-max", "2", "--r", "2")
    assert json_values(out) == ["0", "0", "1"]
    _, out = run("stirling", "--n-max", "4", "--r", "2", "--k", "3")
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1]["indices"] == {"n": 4, "k": 3, "r": 2} and recs[-1]["value"] == "5"
    assert all(r["indices"]["k"] <= r["indices"]["n"] for r in recs)


def test_fubini_and_ordered_bell():
    assert json_values(run("fubini", "--n", "1", "--r", "2", "--x", "1")[1]) == ["3"]
    _, out = run("fubini", "--n", "0", "--r", "9", "--x", "5/7")
    rec = json.loads(out)
    assert rec["value"] == "1" and rec["indices"]["x"] == "5/7"
    assert json_values(run("fubini", "--n", "1", "--r", "2", "--x=-1/2")[1]) == ["3/2"]
    assert json_values(run("ordered-bell", "--n-max", "4")[1]) == ["1", "1", "3", "13", "75"]


@pytest.mark.parametrize(
    "argv",
    [
        ["stirling", "--n-max", "1", "--r", "2"],
        ["fubini", "--n", "1", "--x", "1/0"],
        ["fubini", "--n", "1", "--x", "0.5"],
        ["bernoulli", "--n-max", "-1"],
        ["bernoulli"],
        ["nope"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_csv_header_and_round_trip():
    _, out = run("bernoulli", "--n-max", "20", "--r", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "kind,n,k,r,x,value"
    for row in csv.DictReader(io.StringIO(out)):
        assert format_value(parse_rational(row["value"])) == row["value"]


def test_determinism():
    argv = ["stirling", "--n-max", "12", "--r", "3", "--format", "csv"]
    assert run(*argv) == run(*argv)


def test_verify_small_bounds_pass():
    code, out = run("verify", "--n-max", "0", "--r", "0")
    assert code == 0
    assert out.splitlines()[-1].startswith("verify: OK")


def test_verify_accepts_s_list():
    code, out = run("verify", "--n-max", "4", "--r-max", "1", "--egf-order", "6", "--s=-3/7", "--s", "5")
    assert code == 0
    assert "cases=" in out


def corrupt_builder(r, n_max):
    tri = triangle_build(r, n_max)
    if r != 2 or n_max < 5:
        return tri
    rows = [list(row) for row in tri.rows]
    rows[5 - r][3] += 1
    return StirlingTriangle(r, n_max, tuple(tuple(row) for row in rows))


def test_verify_fault_injection():
    out = io.StringIO()
    code = main(["verify", "--n-max", "6", "--r", "3", "--egf-order", "6"], stdout=out, triangle_builder=corrupt_builder)
    assert code == 1
    text = out.getvalue()
    assert "FAIL stirling.path_equivalence" in text
    assert "first mismatch: stirling.path_equivalence [r=2 n=5 k=3]" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rstirling", "bernoulli", "--n-max", "1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json_values(proc.stdout) == ["1", "-1/2"]
