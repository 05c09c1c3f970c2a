import json
from pathlib import Path

import pytest

from graphspectra.cli import execute, main, parse_invocation, render_plan
from graphspectra.io import emit

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run_cli(argv, capsysbinary):
    code = main(argv)
    out = capsysbinary.readouterr().out
    return code, out


def test_ktheory_golden(capsysbinary):
    code, out = run_cli(["ktheory", "--matrix", str(DATA / "a1.json")], capsysbinary)
    assert code == 0
    assert json.loads(out) == {"k0": {"rank": 2, "torsion": []}, "k1": {"rank": 2}}
    assert out == (GOLDEN / "ktheory_a1.json").read_bytes()


def test_tau_golden(capsysbinary):
    code, out = run_cli(["tau", "--weights", "2,2,2,2,2"], capsysbinary)
    assert code == 0
    payload = json.loads(out)
    assert payload["x"] == pytest.approx(1.38848, abs=1e-5)
    assert out == (GOLDEN / "tau_pentagon.json").read_bytes()


def test_building_golden(capsysbinary):
    code, out = run_cli(["building", "--q", "1", "--cover", "--bm"], capsysbinary)
    assert code == 0
    assert json.loads(out)["bm"]["valences"] == [6, 6]
    assert out == (GOLDEN / "building_q1_cover_bm.json").read_bytes()


def test_goldens_bit_stable(capsysbinary):
    for argv in (["ktheory", "--matrix", str(DATA / "a1.json")],
                 ["tau", "--weights", "2,2,2,2,2"],
                 ["building", "--q", "1", "--cover", "--bm"]):
        _, first = run_cli(argv, capsysbinary)
        _, second = run_cli(argv, capsysbinary)
        assert first == second


def test_ktheory_csv_matrix(capsysbinary):
    code, out = run_cli(["ktheory", "--matrix", str(DATA / "a1.csv")], capsysbinary)
    assert code == 0
    assert json.loads(out)["k0"]["rank"] == 2


def test_ktheory_compare(capsysbinary):
    code, out = run_cli(["ktheory", "--matrix", str(DATA / "a1.json"),
                         "--compare", str(DATA / "theta_edge.json")], capsysbinary)
    assert code == 0
    assert json.loads(out)["verdict"] == "StablyIsomorphic"


def test_spectra_report(capsysbinary):
    code, out = run_cli(["spectra", "--genus", "2", "--levels", "3",
                         "--t", "1.0", "--s", "2.0"], capsysbinary)
    assert code == 0
    report = json.loads(out)
    assert report["lambda_max"] == pytest.approx(3.0)
    assert report["theta"]["partial"] == pytest.approx(7.3915, abs=1e-3)
    assert report["theta"]["tail_bound"] < 1e-12
    assert report["zeta"]["diagnosis"] == "Divergent"
    assert len(report["commutators"]) == 4
    assert report["ck_residuals"]["unit_sum"] < 1e-9


def test_spectra_with_twist(capsysbinary):
    code, out = run_cli(["spectra", "--genus", "2", "--levels", "3",
                         "--twist", "1,0,3,2"], capsysbinary)
    assert code == 0
    report = json.loads(out)
    assert all(c["norm"] == pytest.approx(1.0, abs=1e-9)
               for c in report["commutators"])


def test_spectra_matrix_input(capsysbinary):
    code, out = run_cli(["spectra", "--matrix", str(DATA / "theta_edge.json"),
                         "--levels", "3"], capsysbinary)
    assert code == 0
    assert json.loads(out)["lambda_max"] == pytest.approx(2.0)


def test_theta_sweep_csv_header(capsysbinary):
    code, out = run_cli(["spectra", "--genus", "2", "--levels", "3",
                         "--t", "0.5,1.0,2.0", "--format", "csv"], capsysbinary)
    assert code == 0
    assert out.decode().splitlines()[0] == "t,partial,tail_bound"
    assert len(out.decode().splitlines()) == 4


def test_af_report(capsysbinary):
    code, out = run_cli(["af", "--genus", "2", "--levels", "5",
                         "--p", "1.0", "--q", "3.0"], capsysbinary)
    assert code == 0
    report = json.loads(out)
    assert report["dims"][0] == 4
    assert report["termwise_ok"] and report["partials_ok"]


def test_crossed_report(capsysbinary):
    code, out = run_cli(["crossed", "--count", "80", "--cutoff", "80"], capsysbinary)
    assert code == 0
    assert json.loads(out)["slope"] == pytest.approx(2.0, abs=0.15)


def test_cohomology_report(capsysbinary):
    code, out = run_cli(["cohomology", "--genus", "2", "--levels", "2"], capsysbinary)
    assert code == 0
    assert json.loads(out)["dims"] == [9, 25]


def test_catalog_table(capsysbinary):
    code, out = run_cli(["catalog", "--format", "table"], capsysbinary)
    assert code == 0
    text = out.decode()
    assert "Z^2" in text
    assert "dumbbell" in text


def test_building_validate_links(capsysbinary):
    code, out = run_cli(["building", "--q", "1", "--validate", "--links"],
                        capsysbinary)
    assert code == 0
    report = json.loads(out)
    assert report["validation"]["ok"] is True
    assert report["polyhedron"]["vertices"] == 1
    assert report["polyhedron"]["links_complete_bipartite"] == [True]


def test_building_from_file(tmp_path, capsysbinary):
    code, out = run_cli(["building", "--q", "1"], capsysbinary)
    pres = json.loads(out)["presentation"]
    path = tmp_path / "pres.json"
    path.write_text(json.dumps(pres))
    code, out = run_cli(["building", "--file", str(path), "--validate"], capsysbinary)
    assert code == 0
    assert json.loads(out)["validation"]["rotation_closure"] is True


def test_module_error_json(tmp_path, capsysbinary):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"matrix": [[1, 0]]}))
    code, out = run_cli(["ktheory", "--matrix", str(bad)], capsysbinary)
    assert code == 2
    payload = json.loads(out)
    assert payload["error"]["code"] == "InvalidTransitionMatrix"
    assert "witness" in payload["error"]


def test_degenerate_tau_error(capsysbinary):
    code, out = run_cli(["tau", "--weights", "2,2,2,2"], capsysbinary)
    assert code == 2
    assert json.loads(out)["error"]["code"] == "DegenerateEuclidean"


def test_usage_error_names_flag(capsysbinary):
    code, out = run_cli(["ktheory", "--matrix", str(DATA / "a1.json"),
                         "--no-such-flag"], capsysbinary)
    assert code == 64
    payload = json.loads(out)
    assert payload["error"]["code"] == "UsageError"
    assert "--no-such-flag" in payload["error"]["witness"]


def test_usage_error_missing_required(capsysbinary):
    code, out = run_cli(["ktheory"], capsysbinary)
    assert code == 64
    assert "--matrix" in json.loads(out)["error"]["witness"]


def test_out_file(tmp_path, capsysbinary):
    target = tmp_path / "report.json"
    code, _ = run_cli(["tau", "--weights", "2,2,2,2,2", "--out", str(target)],
                      capsysbinary)
    assert code == 0
    assert json.loads(target.read_text())["x"] == pytest.approx(1.38848, abs=1e-5)


@pytest.mark.parametrize("argv", [
    ["catalog"],
    ["ktheory", "--matrix", "a1.json"],
    ["spectra", "--genus", "2", "--levels", "4", "--t", "0.5,1.0"],
    ["af", "--genus", "2", "--levels", "5", "--p", "1.0", "--q", "3.0"],
    ["crossed", "--base", "linear", "--count", "10", "--cutoff", "20"],
    ["cohomology", "--genus", "2", "--levels", "2"],
    ["building", "--q", "2", "--cover", "--bm", "--format", "table"],
    ["tau", "--weights", "2,3,4,5,6", "--format", "csv"],
])
def test_plan_round_trip(argv):
    plan = parse_invocation(argv)
    assert parse_invocation(render_plan(plan)) == plan


def test_unsupported_format():
    report = {"a": 1}
    with pytest.raises(Exception):
        emit(report, "yaml")


def test_execute_matches_cli(capsysbinary):
    plan = parse_invocation(["cohomology", "--genus", "2", "--levels", "1"])
    report, _ = execute(plan)
    assert report == {"dims": [9]}
