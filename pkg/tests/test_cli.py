"""CLI behavior: exit codes, deterministic JSON, caching, CSV."""

import json
import subprocess
import sys

import pytest

from hypersimplex.cli import main

RUN = [sys.executable, "-m", "hypersimplex.cli"]


def invoke(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hstar_shelling_json(capsys):
    code, out, _ = invoke(["hstar", "--n", "7", "--k", "2", "--r", "1",
                           "--method", "shelling"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["coeffs"] == [1, 14, 35, 7, 0, 0, 0]
    assert blob["method"] == "shelling"


def test_usage_error_exit_code(capsys):
    code, _, err = invoke(["hstar", "--n", "7", "--k", "5", "--r", "9"], capsys)
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "usage"
    code, _, _ = invoke(["hstar", "--n", "8", "--k", "2", "--r", "4"], capsys)
    assert code == 2
    code, _, _ = invoke(["nonsense-verb"], capsys)
    assert code == 2


def test_verify_shelling_output(capsys):
    code, out, _ = invoke(["verify-shelling", "--n", "9", "--k", "2", "--r", "1"],
                          capsys)
    assert code == 0
    assert json.loads(out) == {"ok": True, "count": 247}


def test_repeat_invocations_byte_identical(capsys):
    args = ["ehrhart", "--n", "5", "--k", "2", "--r", "1"]
    _, out1, _ = invoke(args, capsys)
    _, out2, _ = invoke(args, capsys)
    assert out1 == out2


def test_cache_round_trip(tmp_path, capsys):
    args = ["hstar", "--n", "6", "--k", "2", "--r", "2",
            "--cache-dir", str(tmp_path)]
    code, cold, _ = invoke(args, capsys)
    assert code == 0
    cached_files = list(tmp_path.rglob("*.json"))
    assert len(cached_files) == 1
    code, warm, _ = invoke(args, capsys)
    assert code == 0
    assert warm == cold


def test_csv_flattening(capsys):
    code, out, _ = invoke(["hstar", "--n", "6", "--k", "2", "--r", "2",
                           "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,r,method,degree,coeff"
    assert lines[1:] == ["6,2,2,shelling,0,1", "6,2,2,shelling,1,3",
                         "6,2,2,shelling,2,3", "6,2,2,shelling,3,1",
                         "6,2,2,shelling,4,0", "6,2,2,shelling,5,0"]


def test_csv_rejected_for_non_polynomials(capsys):
    code, _, err = invoke(["triangulate", "--n", "5", "--k", "2", "--r", "2",
                           "--format", "csv"], capsys)
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = invoke(["hstar", "--n", "7", "--k", "2", "--r", "2",
                           "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["coeffs"] == [1, 7, 14, 7, 0, 0, 0]


def test_independence_verbs(capsys):
    code, out, _ = invoke(["independence", "--graph", "cycle", "--m", "5"], capsys)
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 5, 5]
    code, out, _ = invoke(["independence", "--n", "13", "--r", "5", "--ell", "13"],
                          capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["vertices"] == 10 and len(blob["edges"]) == 9


def test_ehrhart_single_dilate(capsys):
    code, out, _ = invoke(["ehrhart", "--n", "7", "--k", "2", "--r", "2",
                           "--t", "1"], capsys)
    assert code == 0
    assert json.loads(out)["count"] == 14


def test_resource_budget_exit_code(capsys):
    code, _, err = invoke(["ehrhart", "--n", "9", "--k", "2", "--r", "1",
                           "--t", "40"], capsys)
    assert code == 3
    assert json.loads(err)["error"]["kind"] == "resource"


def test_conjecture_verb(capsys):
    code, out, _ = invoke(["conjecture", "--n", "7", "--k", "3", "--r", "2"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["shelling_ok"] is True and blob["simplices"] == 1


def test_shelling_general_order(capsys):
    code, out, _ = invoke(["shelling", "--n", "6", "--k", "2", "--r", "2",
                           "--order", "general"], capsys)
    assert code == 0
    assert len(json.loads(out)) == 8


def test_report_vacuous(capsys):
    code, out, err = invoke(["report", "--max-n", "3"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["all_ok"] and all(c["vacuous"] for c in blob["criteria"])
    assert "vacuous" in err


def test_report_small_includes_flag(capsys):
    code, out, _ = invoke(["report", "--max-n", "9"], capsys)
    assert code == 0
    blob = json.loads(out)
    assert blob["all_ok"]
    flags = blob["advisory_flags"]
    assert flags and flags[0]["kind"] == "stab3_closed_vs_examples"
    assert flags[0]["formula_value"] == 43 and flags[0]["shelling_value"] == 27


def test_module_entry_point_runs():
    proc = subprocess.run(RUN + ["hstar", "--n", "5", "--k", "2", "--r", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == [1, 0, 0, 0, 0]
