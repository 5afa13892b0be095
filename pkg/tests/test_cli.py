import csv
import io
import json
import math

import pytest

from pqgamma.cli import (
    gaps_nonincreasing,
    limit_rows,
    main,
    run_sec4_campaign,
    sample_affine_specs,
)
from pqgamma.qcore import PQParams


def run(capsys, *argv):
    """Invoke the CLI in-process, returning (exit code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestEval:
    def test_gamma_pq_hand_value_csv(self, capsys):
        code, out, _ = run(capsys, "eval", "--fn", "gamma_pq",
                           "--x", "1", "--p", "2", "--q", "0.5")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 1
        assert float(rows[0]["output"]) == pytest.approx(6 / 7, rel=1e-13)

    def test_psi_at_one_is_minus_euler_gamma(self, capsys):
        code, out, _ = run(capsys, "eval", "--fn", "psi", "--x", "1")
        assert code == 0
        value = float(parse_csv(out)[0]["output"])
        assert value == pytest.approx(-0.5772156649015329, rel=1e-12)

    def test_json_matches_csv_numerically(self, capsys):
        args = ("eval", "--fn", "gamma_pq", "--x", "1.7", "--p", "3", "--q", "0.6")
        _, out_csv, _ = run(capsys, *args)
        _, out_json, _ = run(capsys, *args, "--format", "json")
        v_csv = float(parse_csv(out_csv)[0]["output"])
        v_json = json.loads(out_json)["output"]
        assert v_csv == v_json

    def test_round_trip_serialization(self, capsys):
        _, out, _ = run(capsys, "eval", "--fn", "psi_pq",
                        "--x", "2.3", "--p", "3", "--q", "0.5")
        from pqgamma.psifam import psi_pq

        assert float(parse_csv(out)[0]["output"]) == psi_pq(2.3, PQParams(3, 0.5))

    def test_missing_argument_named(self, capsys):
        code, _, err = run(capsys, "eval", "--fn", "gamma_pq", "--x", "1", "--p", "2")
        assert code == 2
        assert "--q" in err

    def test_domain_error_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "--fn", "gamma_pq",
                           "--x", "-1", "--p", "2", "--q", "0.5")
        assert code == 2
        assert err

    def test_unknown_function_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "--fn", "nope", "--x", "1")
        assert code == 2

    def test_out_file_duplicates_stdout(self, capsys, tmp_path):
        path = tmp_path / "row.csv"
        _, out, _ = run(capsys, "eval", "--fn", "gamma", "--x", "4.5",
                        "--out", str(path))
        assert path.read_text(encoding="utf-8") == out


class TestTable:
    def test_grid_endpoints_and_count(self, capsys):
        code, out, _ = run(capsys, "table", "--fn", "gamma_pq",
                           "--p", "2", "--q", "0.5",
                           "--lo", "1", "--hi", "2", "--count", "3")
        assert code == 0
        rows = parse_csv(out)
        assert [float(r["x"]) for r in rows] == [1.0, 1.5, 2.0]
        assert float(rows[0]["value"]) == pytest.approx(6 / 7, rel=1e-13)

    def test_psi_pq_column_strictly_increasing(self, capsys):
        code, out, _ = run(capsys, "table", "--fn", "psi_pq",
                           "--p", "3", "--q", "0.5",
                           "--lo", "0.5", "--hi", "6", "--count", "40")
        assert code == 0
        vals = [float(r["value"]) for r in parse_csv(out)]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_bad_range_exits_2(self, capsys):
        code, _, _ = run(capsys, "table", "--fn", "gamma", "--lo", "2",
                         "--hi", "1", "--count", "3")
        assert code == 2
        code, _, _ = run(capsys, "table", "--fn", "gamma", "--lo", "1",
                         "--hi", "2", "--count", "1")
        assert code == 2


class TestVerify:
    def test_logconvex_gamma_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "logconvex-gamma", "--points", "24")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["verdict"] == "pass"
        assert float(row["min_slack"]) >= -float(row["tolerance"])

    def test_cm_psi_prime_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "cm-psi-prime", "--points", "24")
        assert code == 0
        assert parse_csv(out)[0]["verdict"] == "pass"

    def test_cm_G_passes_on_valid_vectors(self, capsys):
        code, out, _ = run(capsys, "verify", "cm-G", "--a", "1,2", "--b", "1.5,2.5",
                           "--points", "24")
        assert code == 0
        assert parse_csv(out)[0]["verdict"] == "pass"

    def test_cm_G_rejects_bad_vectors_naming_index(self, capsys):
        code, _, err = run(capsys, "verify", "cm-G", "--a", "1,2", "--b", "0.5,5")
        assert code == 2
        assert "k=1" in err

    def test_lcm_f32_reports_both_variants(self, capsys):
        code, out, _ = run(capsys, "verify", "lcm-f32", "--points", "24")
        rows = parse_csv(out)
        assert {r["case"] for r in rows} == {"as_defined", "as_proved"}
        assert code == 0
        by_case = {r["case"]: r["verdict"] for r in rows}
        assert by_case["as_proved"] == "pass"

    def test_lcm_h_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "lcm-h", "--points", "24")
        assert code == 0
        assert parse_csv(out)[0]["verdict"] == "pass"

    def test_ineq_lemma21_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "ineq-lemma21", "--points", "32")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["verdict"] == "pass"
        assert float(row["min_slack"]) >= -1e-14

    def test_ineq_sec4_passes_with_enough_qualified(self, capsys):
        code, out, _ = run(capsys, "verify", "ineq-sec4", "--samples", "200")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["verdict"] == "pass"
        assert int(row["qualified"]) + int(row["skipped"]) == 200

    def test_seeded_runs_are_byte_identical(self, capsys):
        args = ("verify", "logconvex-gamma", "--points", "16", "--seed", "7")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_unknown_campaign_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "bogus"])
        capsys.readouterr()
        assert exc.value.code == 2


class TestLimits:
    def test_p_gamma_corner(self, capsys):
        code, out, _ = run(capsys, "limits", "p-gamma", "--x", "0.5",
                           "--ladder", "100,1000,10000")
        assert code == 0
        gaps = [float(r["gap"]) for r in parse_csv(out)]
        assert gaps == sorted(gaps, reverse=True)
        # |ln Gamma_p(1/2) - ln sqrt(pi)| keeps shrinking like 1/p
        assert gaps[-1] < 1e-3

    def test_q_to_p_corner(self, capsys):
        code, out, _ = run(capsys, "limits", "q-to-p", "--x", "2", "--p", "10",
                           "--ladder", "0.9,0.99,0.999")
        assert code == 0
        gaps = [float(r["gap"]) for r in parse_csv(out)]
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_psi_diagram_final_entry_near_minus_gamma(self, capsys):
        code, out, _ = run(capsys, "limits", "psi-diagram", "--x", "1")
        assert code == 0
        rows = [r for r in parse_csv(out) if r["edge"] == "psi_p->psi"]
        assert float(rows[-1]["gap"]) < 1e-4

    def test_bad_x_exits_2(self, capsys):
        code, _, _ = run(capsys, "limits", "p-gamma", "--x", "-1")
        assert code == 2

    def test_gaps_nonincreasing_helper(self):
        rows = [("e", 1, 1.0), ("e", 2, 0.5), ("e", 3, 0.5 + 1e-12)]
        assert gaps_nonincreasing(rows)
        assert not gaps_nonincreasing([("e", 1, 1.0), ("e", 2, 2.0)])


class TestSec4Sampling:
    def test_sampler_is_seeded(self):
        assert sample_affine_specs(5, 3) == sample_affine_specs(5, 3)
        assert sample_affine_specs(5, 3) != sample_affine_specs(5, 4)

    def test_campaign_counts_are_consistent(self):
        result = run_sec4_campaign(PQParams(3, 0.5), samples=100, seed=42)
        assert result["qualified"] + result["skipped"] == 100
        assert result["verdict"] == "pass"
        assert result["min_slack"] >= -result["tolerance"]


def test_limit_rows_rejects_unknown_corner():
    from pqgamma.cli import UsageError

    with pytest.raises(UsageError):
        limit_rows("sideways", 1.0)
