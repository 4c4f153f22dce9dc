import csv
import io
import json

import pytest

from clusterminors.cli import WORKERS_ENV, run


def invoke(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_mutate_path():
    code, text = invoke("mutate", "--type", "A2", "--cox", "1,2", "--path", "1,2,1")
    assert code == 0
    seed = json.loads(text)
    assert seed["path"] == [1, 2, 1]
    assert seed["gvectors"] == [[0, -1], [-1, 0]]
    assert len(seed["exchange_matrix"]) == 6


def test_monomial_negative_gvec():
    code, text = invoke("monomial", "--type", "A2", "--cox", "1,2", "--gvec", "-1,0")
    data = json.loads(text)
    assert code == 0 and data["found"]
    assert data["factors"] == [{"variable": data["expansion"], "gvec": [-1, 0], "power": 1}]


def test_monomial_outside_fan():
    code, text = invoke("monomial", "--type", "A1~", "--cox", "1,2", "--gvec", "-1,1", "--bound", "6")
    assert code == 1 and not json.loads(text)["found"]


def test_fan_json():
    code, text = invoke("fan", "--type", "A2", "--cox", "1,2")
    cones = json.loads(text)
    assert code == 0 and len(cones) == 10
    assert {"sortable_word": [], "sign": "+", "generators": [[1, 0], [0, 1]]} in cones


def test_sortable_text():
    code, text = invoke("sortable", "--type", "A2", "--cox", "1,2", "--format", "text")
    assert code == 0 and text.splitlines()[0] == "5 sortable elements"


def test_tables_csv():
    code, text = invoke("tables", "--n", "2")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 6
    row = next(r for r in rows if r["m"] == "1" and r["k"] == "0")
    assert (row["greedy"], row["triangular"], row["generic"]) == ("0", "1", "2")


def test_verify_thm_main():
    code, text = invoke("verify", "thm-main", "--type", "A2", "--cox", "1,2")
    reports = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and reports and all(r["status"] == "pass" for r in reports)
    assert all(r["elapsed_ms"] == 0 for r in reports)


def test_verify_basis_emits_tables():
    code, text = invoke("verify", "basis", "--n", "1", "--kind", "all")
    records = [json.loads(line) for line in text.splitlines()]
    tables = [r["coefficient_table"] for r in records if "coefficient_table" in r]
    assert code == 0 and len(tables) == 3
    assert len({json.dumps(t["computed"]) for t in tables}) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("fan", "--type", "Z9"),
        ("fan", "--type", "A2", "--cox", "1,1"),
        ("fan", "--type", "A2", "--cox", "1,x"),
        ("verify", "no-such-check"),
        ("verify",),
        ("mutate", "--type", "A2", "--path", "3"),
        ("monomial", "--type", "A2", "--gvec", "1,2,3"),
        ("fan", "--bogus"),
        (),
    ],
)
def test_usage_errors(argv):
    assert invoke(*argv)[0] == 2


def test_list_checks():
    for argv in (("--list-checks",), ("verify", "--list-checks")):
        code, text = invoke(*argv)
        names = [json.loads(line)["target"] for line in text.splitlines()]
        assert code == 0 and "thm-main" in names and "negative-control" in names


def test_output_deterministic_and_timings_flag():
    argv = ("verify", "psi", "--type", "A2")
    assert invoke(*argv) == invoke(*argv)
    _, text = invoke(*argv, "--timings")
    assert all("elapsed_ms" in json.loads(line) for line in text.splitlines())


def test_workers_do_not_change_output(monkeypatch):
    argv = ("verify", "exchange", "--type", "A3")
    monkeypatch.setenv(WORKERS_ENV, "1")
    serial = invoke(*argv)
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert invoke(*argv) == serial


def test_out_file(tmp_path):
    target = tmp_path / "fan.json"
    code, text = invoke("fan", "--type", "B2", "--out", str(target))
    assert code == 0 and text == ""
    assert len(json.loads(target.read_text())) == 12


def test_config_file(tmp_path):
    cfg = tmp_path / "b2.json"
    cfg.write_text(json.dumps({"rank": 2, "matrix": [[2, -2], [-1, 2]], "symmetrizer": [1, 2]}))
    code, text = invoke("sortable", "--config", str(cfg), "--cox", "1,2")
    assert code == 0 and json.loads(text)["count"] == 6
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert invoke("sortable", "--config", str(bad))[0] == 2


def test_csv_and_text_formats():
    code, text = invoke("verify", "binomial", "--format", "csv")
    assert code == 0 and text.splitlines()[0] == "check,status,instance,witness"
    code, text = invoke("verify", "binomial", "--format", "text")
    assert text.startswith("PASS")


def test_negative_control_passes():
    code, text = invoke("verify", "negative-control")
    assert code == 0 and len(text.splitlines()) == 2
