import csv
import io
import json
import subprocess
import sys

import pytest
from gmpy2 import mpfr

from trigsum import VerificationReport, decimal_string, emit_report, sweep

CLI = [sys.executable, "-m", "trigsum"]


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    env.pop("TRIGSUM_PRECISION", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=env, timeout=600
    )


class TestDecimalString:
    def test_zero(self):
        assert decimal_string(mpfr(0)) == "0"

    def test_known(self):
        s = decimal_string(mpfr(1) / 3)
        assert s.startswith("3.3333")
        assert s.endswith("e-01")

    def test_negative(self):
        assert decimal_string(mpfr(-2)) == "-2.00000000000000000000000000000e+00"

    def test_significant_digits(self):
        mantissa = decimal_string(mpfr(1) / 7).split("e")[0]
        digits = mantissa.replace("-", "").replace(".", "")
        assert len(digits) == 30


@pytest.fixture(scope="module")
def report():
    return sweep(["EQ17", "EQ16", "EQ12B"], 8, 128)


class TestEmitReport:
    def test_empty_report_json(self):
        empty = VerificationReport(verdicts=[], precision=128)
        assert emit_report(empty, "json").strip() == "[]"

    def test_json_schema(self, report):
        rows = json.loads(emit_report(report, "json"))
        assert rows
        for row in rows:
            assert set(row) >= {
                "identity", "params", "lhs", "rhs", "residual", "scale", "status",
            }
        exact_pass = [
            r for r in rows if r["identity"] == "EQ17" and r["status"] == "PASS"
        ]
        assert exact_pass and all(r["residual"] == "0" for r in exact_pass)
        eq16 = [r for r in rows if r["identity"] == "EQ16"]
        assert all(r["status"] == "FAIL" and r["corrected_status"] == "PASS" for r in eq16)
        # exact identities carry fraction strings, never floats
        for r in eq16:
            assert "/" in r["lhs"] or r["lhs"].lstrip("-").isdigit()

    def test_approximate_rows_carry_bound(self, report):
        rows = json.loads(emit_report(report, "json"))
        approx = [r for r in rows if r["identity"] == "EQ12B"]
        assert approx
        for r in approx:
            assert "+/-" in r["rhs"]

    def test_csv_round_trips_columns(self, report):
        text = emit_report(report, "csv")
        rows = list(csv.reader(io.StringIO(text)))
        header, data = rows[0], rows[1:]
        assert header[:2] == ["identity", "params"]
        assert len(data) == len(report.verdicts)
        assert all(len(r) == len(header) for r in data)

    def test_text_mentions_errata_and_counts(self, report):
        text = emit_report(report, "text")
        assert "EQ16" in text
        assert "errata" in text
        assert "128" in text

    def test_deterministic(self, report):
        for fmt in ("text", "json", "csv"):
            assert emit_report(report, fmt) == emit_report(report, fmt)

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            emit_report(report, "yaml")


class TestCliEval:
    def test_eval_text(self):
        r = run_cli("eval", "--p", "3", "--q", "2", "--r", "1")
        assert r.returncode == 0
        assert r.stdout.startswith("S[n=1,m=1,l=1](p=3,q=2,r=1) = 1.3333333")
        assert "+/-" in r.stdout

    def test_eval_json(self):
        r = run_cli("eval", "--p", "5", "--q", "2", "--r", "1", "--format", "json")
        payload = json.loads(r.stdout)
        assert payload["spec"]["p"] == 5
        assert "value" in payload and "bound" in payload

    def test_eval_pole_is_usage_error(self):
        r = run_cli("eval", "--p", "4", "--q", "2", "--r", "1")
        assert r.returncode == 2
        assert r.stdout == ""
        assert "error" in r.stderr

    def test_precision_env_override(self):
        r64 = run_cli(
            "eval", "--p", "3", "--q", "2", "--r", "1",
            env_extra={"TRIGSUM_PRECISION": "64"},
        )
        r_flag = run_cli(
            "eval", "--p", "3", "--q", "2", "--r", "1", "--precision", "64"
        )
        assert r64.stdout == r_flag.stdout
        r_bad = run_cli(
            "eval", "--p", "3", "--q", "2", "--r", "1",
            env_extra={"TRIGSUM_PRECISION": "three"},
        )
        assert r_bad.returncode == 2

    def test_flag_beats_env(self):
        r = run_cli(
            "eval", "--p", "3", "--q", "2", "--r", "1", "--precision", "128",
            env_extra={"TRIGSUM_PRECISION": "64"},
        )
        base = run_cli("eval", "--p", "3", "--q", "2", "--r", "1")
        assert r.stdout == base.stdout


class TestCliDedekind:
    def test_fast(self):
        r = run_cli("dedekind", "--q", "1", "--p", "3", "--method", "fast")
        assert r.returncode == 0
        assert r.stdout == "1/18\n"

    def test_def(self):
        r = run_cli("dedekind", "--q", "1", "--p", "3", "--method", "def")
        assert r.stdout == "1/18\n"

    def test_not_coprime(self):
        r = run_cli("dedekind", "--q", "2", "--p", "4")
        assert r.returncode == 2


class TestCliVerify:
    def test_pass_exits_zero(self):
        r = run_cli("verify", "--id", "EQ17", "--p", "5", "--q", "3")
        assert r.returncode == 0
        assert "PASS" in r.stdout

    def test_known_misprint_exits_zero(self):
        r = run_cli("verify", "--id", "EQ16", "--p", "5", "--q", "3")
        assert r.returncode == 0
        assert "FAIL" in r.stdout

    def test_misprint_with_empty_errata_exits_one(self, tmp_path):
        errata = tmp_path / "errata.json"
        errata.write_text('{"expected_fail": []}')
        r = run_cli(
            "verify", "--id", "EQ16", "--p", "5", "--q", "3",
            "--known-errata", str(errata),
        )
        assert r.returncode == 1

    def test_unknown_id(self):
        r = run_cli("verify", "--id", "EQ1", "--p", "3")
        assert r.returncode == 2
        assert "unknown identity" in r.stderr

    def test_out_of_domain(self):
        r = run_cli("verify", "--id", "EQ17", "--p", "4", "--q", "2")
        assert r.returncode == 2


class TestCliSweep:
    def test_ids_subset_json(self):
        r = run_cli("sweep", "--ids", "EQ17,EQ3", "--pmax", "10", "--format", "json")
        assert r.returncode == 0
        rows = json.loads(r.stdout)
        assert {row["identity"] for row in rows} == {"EQ3", "EQ17"}

    def test_sweep_writes_out_file(self, tmp_path):
        out = tmp_path / "report.csv"
        r = run_cli(
            "sweep", "--ids", "EQ17", "--pmax", "6", "--format", "csv",
            "--out", str(out),
        )
        assert r.returncode == 0
        assert r.stdout == ""
        assert out.read_text().startswith("identity,params")

    def test_round_trip_multiset(self):
        r = run_cli("sweep", "--ids", "EQ16,EQ13", "--pmax", "9", "--format", "json")
        rows = json.loads(r.stdout)
        rep = sweep(["EQ16", "EQ13"], 9, 128)
        got = sorted(
            (row["identity"], tuple(sorted(row["params"].items())), row["status"])
            for row in rows
        )
        want = sorted(
            (v.identity, tuple(sorted(v.params_dict.items())), v.status)
            for v in rep.verdicts
        )
        assert got == want

    def test_bad_ids_usage_error(self):
        r = run_cli("sweep", "--ids", "EQ1,EQ17", "--pmax", "10")
        assert r.returncode == 2
        assert "unknown identity" in r.stderr


def test_module_and_console_entry_agree():
    a = run_cli("dedekind", "--q", "3", "--p", "7")
    b = subprocess.run(
        ["trigsum", "dedekind", "--q", "3", "--p", "7"],
        capture_output=True, text=True, timeout=600,
    )
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode
