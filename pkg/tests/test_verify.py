from fractions import Fraction

from rstirling.verify import CHECKS, VerifyConfig, format_report, run_check, run_verification


def test_checks_cover_every_module():
    prefixes = {name.split(".")[0] for name in CHECKS}
    assert prefixes == {"exact_arith", "stirling", "bernoulli", "fubini", "egf"}


def test_results_sorted_and_passing():
    results = run_verification(max_n=6, max_r=2, egf_order=8)
    assert [r.identity for r in results] == sorted(CHECKS)
    assert all(r.ok for r in results)
    assert format_report(results)[-1] == f"verify: OK ({len(CHECKS)} identities)"


def test_bad_s_value_still_formal_identity():
    # s = 1 makes 1 + s - s e^t = 2 - e^t; still constant term 1
    res = run_check("egf.integrated_identity", VerifyConfig(max_n=2, max_r=2, egf_order=10, s_values=(Fraction(1),)))
    assert res.ok and res.cases == 3 * 11


def test_mismatch_description():
    def broken(r, n_max):
        from rstirling.stirling import StirlingTriangle, triangle_build

        t = triangle_build(r, n_max)
        rows = [list(x) for x in t.rows]
        rows[-1][-1] = 2
        return StirlingTriangle(r, n_max, tuple(map(tuple, rows)))

    res = run_check("stirling.path_equivalence", VerifyConfig(max_n=1, max_r=0, triangle_builder=broken))
    assert not res.ok
    assert res.mismatch.describe() == "stirling.path_equivalence [r=0 n=1 k=1] left=2 right=1"
