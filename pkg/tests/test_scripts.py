import csv
import importlib.util
import json
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_run_survey_small(tmp_path, capsys):
    mod = load("run_survey")
    assert mod.main(["--m-max", "8", "--deltas", "1,4", "--out-dir", str(tmp_path)]) == 0
    rows = list(csv.DictReader(open(tmp_path / "survey_census.csv")))
    per_element = {}
    for r in rows:
        per_element[r["element"]] = per_element.get(r["element"], 0) + int(r["count"])
    assert len(per_element) == 17 and len(set(per_element.values())) == 1
    rational = list(csv.DictReader(open(tmp_path / "rational_delta_beta.csv")))
    assert {(r["m"], r["n"]) for r in rational} == {("4", "3")}
    assert "triangles" in capsys.readouterr().out


def test_run_searches_json(capsys):
    mod = load("run_searches")
    assert mod.main(["--bound", "30", "--unconstrained-bound", "4", "--median-m-max", "10", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    got = {(r["equation"], r["regime"]): r["solutions"] for r in doc["quartic"]}
    assert got["A", "both-odd"] == ["(1,1,1)"] and got["B", "mixed"] == []
    assert len(got["A", "unconstrained"]) == 4
    assert doc["median"]["hits"] == []
