from __future__ import annotations

import csv
import io
import json

from nilsec.cli import CSV_COLUMNS, main
from nilsec.secant import SecantReport


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_info_json():
    code, out, _ = run("info", "so11:[2^4,1^3]", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dimCS"] == 46 and data["defect"] == 2
    assert SecantReport.from_json(data).to_json() == data


def test_info_text_exceptional():
    code, out, _ = run("info", "E7:(3A1)''")
    assert code == 0 and "D4" in out and "(A5)''" in out


def test_verify_ranks():
    code, out, _ = run("verify", "--type", "sl9", "--suite", "ranks")
    assert code == 0 and "forbidden {6}" in out and out.startswith("PASS")


def test_verify_failure_exit(monkeypatch):
    from nilsec import verify

    monkeypatch.setattr(verify, "forbidden_ranks", lambda t: set())
    code, out, _ = run("verify", "--type", "sl9", "--suite", "ranks")
    assert code == 1 and "FAIL" in out


def test_poset_dot_chain():
    code, out, _ = run("poset", "sp4", "--dot")
    assert code == 0
    assert out.count("->") == 3 and out.count("label=") == 4
    assert 'label="2,1^2 (4)", style=filled' in out


def test_poset_json():
    code, out, _ = run("poset", "so8", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["nodes"]) == 12
    labels = {n["label"] for n in data["nodes"]}
    assert all(a in labels and b in labels for a, b in data["edges"])


def test_list_and_filter():
    code, out, _ = run("list", "sl6", "--defective", "--json")
    rows = json.loads(out)
    assert code == 0 and rows and all(r["defect"] != "" for r in rows)
    code, out, _ = run("list", "E6")
    assert code == 0 and "E6CompleteIntersection" in out


def test_export_csv(tmp_path):
    path = tmp_path / "cat.csv"
    code, _, _ = run("export", "sl4", "G2", "--format", "csv", "-o", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert list(rows[0].keys()) == CSV_COLUMNS
    assert len(rows) == 5 + 5
    g2 = [r for r in rows if r["algebra"] == "G2" and r["label"] == "A1"][0]
    assert g2["tilde"] == "G2(a1)" and g2["defect"] == "1"


def test_export_json_stdout():
    code, out, _ = run("export", "sp4", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 4


def test_higher_secant():
    assert run("higher-secant", "2", "2")[:2] == (0, "7\n")
    assert run("higher-secant", "0", "2")[0] == 2


def test_usage_errors():
    assert run("info", "sl7:[3,3]")[0] == 2
    assert run("info", "nonsense")[0] == 2
    assert run("bogus")[0] == 2
    assert run("poset", "E6")[0] == 2
    assert run("verify", "--suite", "nope")[0] == 2
    code, _, err = run("list", "sl13")
    assert code == 2 and "--force" in err
    assert run("list", "sl13", "--force")[0] == 0


def test_data_dir_failure(tmp_path, monkeypatch):
    # main() exports --data-dir through the environment; monkeypatch restores it afterwards
    monkeypatch.setenv("NILSEC_DATA_DIR", str(tmp_path))
    code, _, err = run("--data-dir", str(tmp_path), "info", "E6:A1")
    assert code == 1 and "not found" in err
