import csv
import io
import json
import subprocess
import sys

import pytest

from pythsec import cli
from pythsec.papercheck import SelfInconsistencyError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_elements_json(capsys):
    code, out, _ = run(capsys, "elements", "--params", "1,2,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rho"] == {"num": 1, "den": 1, "radicand": 1, "decimal": "1.000000000000", "class": "Integer"}
    assert doc["mu_gamma"]["radicand"] == 73 and doc["mu_gamma"]["den"] == 2
    assert doc["s"] == {"num": 6, "den": 1} and doc["area"] == {"num": 6, "den": 1}
    assert cli.dump_json(doc) == out


def test_elements_from_triple_table(capsys):
    code, out, _ = run(capsys, "elements", "--triple", "28,96,100")
    assert code == 0
    row = next(line for line in out.splitlines() if line.startswith("delta_beta"))
    assert row.split()[2:] == ["35", "35.000000000000", "Integer"]


def test_elements_digits(capsys):
    _, out, _ = run(capsys, "elements", "--params", "1,2,1", "--format", "csv", "--digits", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["element"] for r in rows][:2] == ["R", "rho"]
    assert rows[0]["decimal"] == "2.500"


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["elements", "--params", "1,1,1"], "m>n, parity"),
        (["elements", "--triple", "6,4,3"], "not a Pythagorean triple"),
        (["elements", "--params", "1,2"], "three comma-separated"),
        (["elements"], "required"),
        (["search", "--equation", "C", "--regime", "mixed"], "invalid choice"),
        (["family", "--family", "6"], "1..5"),
        (["verify-paper", "--survey-m", "1"], "at least 2"),
    ],
)
def test_usage_errors_exit_1(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert needle in err


def test_family_5(capsys):
    code, out, _ = run(capsys, "family", "--family", "5", "--bound", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["members"]) == 1
    member = doc["members"][0]
    assert (member["k"], member["l"], member["m"], member["n"], member["root"], member["value"]) == (2, 1, 4, 3, 5, "35/3")


def test_family_4_rejection_row(capsys):
    code, out, _ = run(capsys, "family", "--family", "4", "--bound", "2")
    assert code == 0
    assert "no members" in out
    assert any(line.startswith("(2,1)") and line.endswith("m=3 < n=4") for line in out.splitlines())


def test_family_1_with_delta_clearing_denominator(capsys):
    _, out, _ = run(capsys, "family", "--family", "1", "--bound", "6", "--delta", "1225", "--format", "csv")
    rows = [r for r in csv.DictReader(io.StringIO(out)) if r["kind"] == "member"]
    assert len(rows) == 1
    assert (rows[0]["value"], rows[0]["class"]) == ("1077378553", "Integer")


@pytest.mark.parametrize(
    "argv, lines",
    [
        (["--equation", "B", "--regime", "mixed", "--bound", "300"], ["0 solutions in box 300×300"]),
        (["--equation", "A", "--regime", "both-odd", "--bound", "50"], ["1 solution in box 50×50", "(1,1,1)"]),
        (["--equation", "A", "--regime", "unconstrained", "--bound", "3"],
         ["3 solutions in box 3×3", "(1,1,1),(2,2,4),(3,3,9)"]),
    ],
)
def test_search(capsys, argv, lines):
    code, out, _ = run(capsys, "search", *argv)
    assert code == 0
    assert out.splitlines()[1:] == lines


def test_verify_paper_table(capsys):
    code, out, _ = run(capsys, "verify-paper", "--survey-m", "10")
    assert code == 0
    assert "ConfirmedWithErratum family1.delta_beta.denominator paper=42875 normative=1225" in out
    for cid in ("i.R", "iii.delta_beta", "v.rho_alpha", "sec5.mu_gamma"):
        assert f" {cid}" in out


def test_verify_paper_csv_is_byte_stable(capsys):
    _, first, _ = run(capsys, "verify-paper", "--survey-m", "6", "--format", "csv")
    _, second, _ = run(capsys, "verify-paper", "--survey-m", "6", "--format", "csv")
    assert first == second
    rows = list(csv.DictReader(io.StringIO(first)))
    assert list(rows[0]) == ["claim_id", "status", "paper_value", "normative_value", "note"]
    assert [r["claim_id"] for r in rows] == sorted(r["claim_id"] for r in rows)


def test_verify_paper_json_round_trip(capsys):
    _, out, _ = run(capsys, "verify-paper", "--survey-m", "6", "--format", "json")
    assert cli.dump_json(json.loads(out)) == out


def test_verify_paper_exit_2_on_unexpected_outcome_set(capsys, monkeypatch):
    monkeypatch.setattr(cli, "EXPECTED_FLAGGED", {})
    code, _, err = run(capsys, "verify-paper", "--survey-m", "4")
    assert code == 2
    assert "iii.delta_beta" in err


def test_verify_paper_exit_2_on_self_inconsistency(capsys, monkeypatch):
    def broken(*_):
        raise SelfInconsistencyError("paths disagree")

    monkeypatch.setattr(cli, "verify_paper", broken)
    code, _, err = run(capsys, "verify-paper")
    assert code == 2 and "paths disagree" in err


def test_module_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "pythsec", "elements", "--params", "4,4,3"],
                        capture_output=True, text=True)
    assert ok.returncode == 0 and "δ_β" in ok.stdout
    bad = subprocess.run([sys.executable, "-m", "pythsec", "search", "--equation", "A",
                          "--regime", "sideways"], capture_output=True, text=True)
    assert bad.returncode == 1
