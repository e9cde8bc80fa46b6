"""End-to-end tests of the command-line surface and its exit-code contract."""

import csv
import json

import pytest

from confounder_lab import cli, summarize
from confounder_lab.model import sample_proxy

PROXY_DOC = {
    "graph": "proxy",
    "p_c": 0.3,
    "p_d_given_c": [0.8, 0.2],
    "p_a_given_c": [0.7, 0.4],
    "mu": [[0.1, 0.9], [0.6, 0.2]],
}

DRIVER_DOC = {
    "graph": "driver",
    "p_d": 0.4,
    "p_c_given_d": [0.7, 0.2],
    "p_a_given_c": [0.7, 0.4],
    "mu": [[0.1, 0.9], [0.6, 0.2]],
}


def write_doc(tmp_path, doc, name="params.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_emits_versioned_summary(tmp_path, capsys):
    path = write_doc(tmp_path, PROXY_DOC)
    code, out, err = run_cli(capsys, "analyze", "--params", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "v1"
    effects_doc = doc["effects"]
    assert set(effects_doc) == {
        "rd_true",
        "rd_obs",
        "rd_crude",
        "e_y_do_a",
        "e_y_do_abar",
        "s_a",
        "s_abar",
    }
    assert doc["params"] == PROXY_DOC  # bit-exact round-trip
    assert doc["monotonicity"]["y_in_c"] == "neither"
    assert doc["in_between"] is True
    assert set(doc["bounds_verdict"]) == {"s_a", "s_abar"}


def test_analyze_driver_routes_through_conversion(tmp_path, capsys):
    driver_path = write_doc(tmp_path, DRIVER_DOC, "driver.json")
    code, out, _ = run_cli(capsys, "analyze", "--params", driver_path)
    assert code == 0
    driver_out = json.loads(out)

    from confounder_lab.cli import params_from_dict, params_to_dict
    from confounder_lab.model import to_proxy

    proxy_equiv = params_to_dict(to_proxy(params_from_dict(DRIVER_DOC)))
    proxy_path = write_doc(tmp_path, proxy_equiv, "converted.json")
    code, out, _ = run_cli(capsys, "analyze", "--params", proxy_path)
    assert code == 0
    proxy_out = json.loads(out)
    for key, value in driver_out["effects"].items():
        assert abs(value - proxy_out["effects"][key]) <= 1e-12
    assert driver_out["monotonicity"] == proxy_out["monotonicity"]


def test_analyze_degenerate_proxy_exits_2(tmp_path, capsys):
    doc = dict(PROXY_DOC, p_d_given_c=[0.5, 0.5])
    path = write_doc(tmp_path, doc)
    code, out, err = run_cli(capsys, "analyze", "--params", path)
    assert code == 2
    reason = json.loads(err)
    assert reason["schema"] == "v1"
    assert reason["error"] == "DegenerateProxy"


def test_analyze_out_of_range_exits_2(tmp_path, capsys):
    path = write_doc(tmp_path, dict(PROXY_DOC, p_c=1.0))
    code, _, err = run_cli(capsys, "analyze", "--params", path)
    assert code == 2
    assert json.loads(err)["error"] == "OutOfRange"


def test_analyze_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "analyze", "--params", str(path))
    assert code == 2
    assert json.loads(err)["error"] == "InvalidDocument"


def test_analyze_missing_file_exits_3(tmp_path, capsys):
    code, _, err = run_cli(capsys, "analyze", "--params", str(tmp_path / "nope.json"))
    assert code == 3
    assert "I/O error" in err


def test_simulate_writes_consistent_artifacts(tmp_path, capsys):
    out_csv = tmp_path / "runs.csv"
    summary_json = tmp_path / "summary.json"
    code, _, _ = run_cli(
        capsys,
        "simulate",
        "--n", "200",
        "--seed", "6",
        "--out", str(out_csv),
        "--summary", str(summary_json),
    )
    assert code == 0
    with open(out_csv, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 200
    doc = json.loads(summary_json.read_text())
    assert doc["schema"] == "v1"
    # summary matches a recount from the CSV
    assert doc["n_in_between"] == sum(1 for r in rows if r["in_between"] == "true")
    mono = sum(1 for r in rows if r["y_in_d"] in ("nondecreasing", "nonincreasing", "constant"))
    assert doc["n_monotone_d"] == mono
    counts = doc["table"]["counts"]
    neither = sum(1 for r in rows if r["y_in_c"] == "neither")
    assert counts[2][2] == neither


def test_simulate_same_seed_is_byte_identical(tmp_path, capsys):
    paths = []
    for name in ("a", "b"):
        out_csv = tmp_path / f"{name}.csv"
        summary_json = tmp_path / f"{name}.json"
        code, _, _ = run_cli(
            capsys,
            "simulate", "--n", "150", "--seed", "9",
            "--out", str(out_csv), "--summary", str(summary_json),
        )
        assert code == 0
        paths.append((out_csv.read_bytes(), summary_json.read_bytes()))
    assert paths[0] == paths[1]


def test_simulate_unwritable_path_exits_3(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "simulate", "--n", "10", "--out", str(tmp_path / "no_dir" / "x.csv")
    )
    assert code == 3


@pytest.mark.parametrize(
    "suite", ["thm1", "cor1", "thm2", "thm3", "thm4", "thm5", "driver", "bounds"]
)
def test_verify_suites_pass(suite, capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", suite, "--n", "300", "--seed", "3")
    assert code == 0
    assert "violations=0" in out


def test_verify_corrupted_harness_detects_failures(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "thm2", "--n", "50", "--seed", "3", "--corrupt"
    )
    assert code == 1
    assert "violations=50" in out
    assert "first counterexample" in out


def test_generate_then_estimate_round_trip(tmp_path, capsys):
    params_path = write_doc(tmp_path, PROXY_DOC)
    data_path = tmp_path / "data.csv"
    code, _, _ = run_cli(
        capsys,
        "generate", "--params", params_path, "--n", "20000", "--seed", "14",
        "--out", str(data_path),
    )
    assert code == 0
    with open(data_path) as fh:
        header = fh.readline().strip()
    assert header == "a,d,y"

    code, out, _ = run_cli(capsys, "estimate", "--data", str(data_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "v1"
    assert doc["n_total"] == 20000
    assert doc["y_in_d"] in ("nondecreasing", "nonincreasing", "constant", "neither")
    assert doc["inference"].startswith("RD_obs") or doc["inference"] == "Inconclusive"
    assert abs(doc["rd_obs"] - doc["rd_crude"]) < 1.0


def test_estimate_empty_stratum_exits_2(tmp_path, capsys):
    path = tmp_path / "partial.csv"
    path.write_text("a,d,y\n0,0,1\n0,1,0\n1,1,1\n")
    code, _, err = run_cli(capsys, "estimate", "--data", str(path))
    assert code == 2
    assert json.loads(err)["error"] == "EmptyStratum"


def test_estimate_rejects_wrong_header(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("x,y,z\n0,0,1\n")
    code, _, err = run_cli(capsys, "estimate", "--data", str(path))
    assert code == 2
    assert json.loads(err)["error"] == "InvalidDocument"


def test_transport_pipeline(tmp_path, capsys):
    pop1 = {
        "graph": "driver",
        "p_d": 0.35,
        "p_c_given_d": [0.8, 0.3],
        "p_a_given_c": [0.7, 0.4],
        "mu": [[0.2, 0.5], [0.3, 0.9]],
    }
    pop2 = dict(pop1, p_d=0.6, mu=[[0.6, 0.1], [0.2, 0.4]])
    for i, doc in enumerate((pop1, pop2), start=1):
        run_cli(
            capsys,
            "generate",
            "--params", write_doc(tmp_path, doc, f"pop{i}.json"),
            "--n", "50000", "--seed", str(40 + i),
            "--out", str(tmp_path / f"pop{i}.csv"),
        )
    code, out, _ = run_cli(
        capsys,
        "transport",
        "--pop1", str(tmp_path / "pop1.csv"),
        "--pop2", str(tmp_path / "pop2.csv"),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "v1"
    assert doc["verdict"] == "RD_obs >= RD_true"
    assert doc["y_in_d"] == "nondecreasing"
    assert doc["a_in_d"] == "nondecreasing"


def test_cli_values_match_library(tmp_path, capsys):
    params = sample_proxy(321)
    path = write_doc(tmp_path, cli.params_to_dict(params))
    code, out, _ = run_cli(capsys, "analyze", "--params", path)
    assert code == 0
    doc = json.loads(out)
    s = summarize(params)
    assert doc["effects"]["rd_true"] == s.rd_true
    assert doc["effects"]["rd_obs"] == s.rd_obs
    assert doc["effects"]["rd_crude"] == s.rd_crude
