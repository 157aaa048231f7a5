import csv
import io
import json
import subprocess
import sys

import pytest

from micz.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, allowed_charges, parse_mu, run
from micz.repcalc import EVEN_D_RESTRICTION


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_spectrum_hydrogen_table():
    code, out, _ = call("spectrum", "--dim", "3", "--mu", "0", "--levels", "3")
    assert code == EXIT_OK
    assert "-1/32" in out and "FAIL" not in out


def test_verify_monopole_example():
    code, out, _ = call("verify-monopole", "--dim", "5", "--mu", "1", "--points", "20", "--seed", "7")
    assert code == EXIT_OK
    assert "lemma-part1" in out and "lemma-part2" in out


def test_even_dimension_restriction():
    code, out, err = call("verify-operators", "--dim", "4", "--mu", "1")
    assert code == EXIT_USAGE
    assert EVEN_D_RESTRICTION in err
    assert out == ""


@pytest.mark.parametrize("argv", [
    ("spectrum", "--dim", "3", "--mu", "0.5"),
    ("spectrum", "--mu", "1/2"),
    ("spectrum", "--dim", "2"),
    ("frobnicate",),
    ("verify-claim", "--dim", "5", "--mu", "-1/2"),
    ("verify-claim", "--dim", "6", "--mu", "1/2"),
    ("verify-monopole", "--dim", "3", "--points", "0"),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_budget_exit():
    code, _, err = call("verify-rep", "--dim", "7", "--mu", "3/2", "--budget", "10")
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_parse_mu_is_exact():
    assert parse_mu("-3/2") == pytest.approx(-1.5) and str(parse_mu("2/4")) == "1/2"
    assert [str(m) for m in allowed_charges(4)] == ["0", "1/2"]
    assert len(allowed_charges(5)) == 7


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_deterministic_output(fmt):
    argv = ("verify-operators", "--dim", "3", "--mu", "1/2", "--points", "2", "--sections", "1",
            "--seed", "3", "--format", fmt)
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == EXIT_OK


def test_json_lines():
    code, out, _ = call("verify-monopole", "--dim", "4", "--mu", "1/2", "--points", "3", "--format", "json")
    assert code == EXIT_OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert {r["identity"] for r in recs} >= {"lemma-part1", "lemma-part3", "curvature-closed-form-vs-jet"}
    assert all(r["pass"] for r in recs)
    assert all(r["mu"] == "1/2" and r["D"] == 4 for r in recs)


def test_csv_reports():
    code, out, _ = call("verify-clifford", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["params"].split(";")[0] for r in rows] == [f"d={d}" for d in range(2, 9)]
    assert all(r["pass"] == "true" for r in rows)


def test_level_table_formats():
    code, out, _ = call("level-table", "--dim", "4", "--mu", "1/2", "--levels", "2", "--format", "json")
    assert code == EXIT_OK
    t = json.loads(out)
    assert [lv["degeneracy"] for lv in t["levels"]] == [4, 16, 40]
    code, out, _ = call("level-table", "--dim", "3", "--levels", "1", "--format", "csv")
    assert out.splitlines()[0].startswith("D,mu,I,E")


@pytest.mark.parametrize("argv", [
    ("verify-rep", "--dim", "5", "--mu", "-3/2"),
    ("verify-claim", "--dim", "7", "--mu", "1"),
    ("verify-ladder", "--dim", "5", "--mu", "3/2"),
    ("conjecture-probe", "--dim", "5"),
    ("verify-operators", "--dim", "3", "--mu", "1", "--points", "1", "--sections", "1", "--order", "3"),
])
def test_commands_pass(argv):
    code, out, _ = call(*argv)
    assert code == EXIT_OK, out


def test_order_filters_relations():
    _, out, _ = call("verify-operators", "--dim", "3", "--points", "1", "--sections", "1", "--order", "2",
                     "--format", "json")
    (rec,) = [json.loads(line) for line in out.splitlines()]
    assert set(rec["info"]["checks_per_relation"]) == {"L-L"}


def test_failure_exit_is_conjunction(monkeypatch):
    from micz import cli
    from micz.report import Report

    def suite(args):
        yield Report("ok", {})
        bad = Report("bad", {})
        bad.truth(False)
        yield bad

    monkeypatch.setitem(cli.SUITES, "verify-rep", suite)
    code, out, _ = call("verify-rep", "--dim", "3")
    assert code == EXIT_FAIL and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "micz", "spectrum", "--dim", "3", "--levels", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "-1/8" in proc.stdout
