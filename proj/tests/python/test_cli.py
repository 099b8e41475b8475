"""Smoke tests for the entglkit command-line tool."""

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("ENTGLKIT_CLI", "entglkit")


def run(*args, check=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check is not None:
        assert proc.returncode == check, proc.stderr
    return proc


@pytest.fixture
def chessboard_file(tmp_path):
    path = tmp_path / "chess.json"
    run("zoo", "--family", "chessboard", "--out", path, check=0)
    return path


def test_chessboard_realignment(chessboard_file, tmp_path):
    w_path = tmp_path / "w.json"
    rep = json.loads(run("check", chessboard_file, "--witness-out", w_path, check=0).stdout)
    assert rep["ppt"] is True
    assert rep["dims"] == [3, 3]
    assert abs(rep["realignment_norm"] - 7 / 6) < 1e-10
    assert rep["witness"] == str(w_path)
    assert rep["witness_value"] < 0
    w = json.loads(w_path.read_text())
    assert w["dims"] == [3, 3] and len(w["data"]) == 81


def test_normalized_witness_has_unit_trace(chessboard_file, tmp_path):
    w_path = tmp_path / "w.json"
    rep = json.loads(run("check", chessboard_file, "--witness-out", w_path, "--normalize-witness", check=0).stdout)
    w = json.loads(w_path.read_text())
    trace = sum(w["data"][i * 9 + i][0] for i in range(9))
    assert abs(trace - 1) < 1e-12
    assert rep["witness_value"] < 0


def test_distill_exit_codes_and_determinism(tmp_path):
    yes = tmp_path / "w06.json"
    no = tmp_path / "w04.json"
    run("zoo", "--family", "werner", "--d", 3, "--beta", -0.6, "--out", yes, check=0)
    run("zoo", "--family", "werner", "--d", 3, "--beta", -0.4, "--out", no, check=0)
    a = run("distill", yes, "--tests", 2000, "--seed", 4, check=0).stdout
    b = run("distill", yes, "--tests", 2000, "--seed", 4, check=0).stdout
    assert a == b
    assert json.loads(a)["detected"] is True
    rep = json.loads(run("distill", no, "--tests", 500, "--seed", 4, check=10).stdout)
    assert rep["detected"] is False and rep["tests_run"] == 500


def test_missing_seed_is_reported(tmp_path):
    path = tmp_path / "w.json"
    run("zoo", "--family", "werner", "--d", 3, "--beta", -0.9, "--out", path, check=0)
    proc = run("distill", path, "--tests", 50, check=0)
    assert "seed" in proc.stderr
    assert isinstance(json.loads(proc.stdout)["seed"], int)


def test_classify_permutations():
    counts = {r: json.loads(run("classify-permutations", "-r", r, check=0).stdout)["orbit_count"] for r in (2, 3, 4)}
    assert counts == {2: 3, 3: 7, 4: 23}


def test_volume_csv(tmp_path):
    out = tmp_path / "curve.csv"
    rep = json.loads(
        run("volume", "--dim", 3, "--states", 40, "--tests", 20, "--opt-steps", 5, "--seed", 9, "--out", out,
            check=0).stdout)
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["test_index", "cumulative_fraction"]
    values = [float(r[1]) for r in rows[1:]]
    assert values == sorted(values)
    assert rep["n_states"] == 40
    assert abs(values[-1] - (1 - rep["frac_npt_undetected"])) < 1e-12


def test_protocol_csv():
    text = run("protocol", "--name", "recurrence", "--y0", 0.65, "--tol", 1e-6, "--rounds", 100, check=0).stdout
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["step", "fidelity"]
    fid = [float(r[1]) for r in rows[1:]]
    assert fid == sorted(fid) and 1 - fid[-1] < 1e-6
    breeding = run("protocol", "--name", "breeding", "--p", "1,0,0,0", check=0).stdout.splitlines()
    assert breeding[1] == "1.0,1.0"


def test_zoo_meta():
    rep = json.loads(run("zoo", "--family", "isotropic", "--d", 3, "--beta", 16, "--meta", check=0).stdout)
    assert rep["params"]["schmidt_number"] == 3
    assert rep["flags"]["entangled"] is True


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dims": [2],\n "data": [[1,0],\n')
    proc = run("check", bad, check=3)
    assert "line" in proc.stderr


def test_invalid_parameters_exit_code(tmp_path):
    run("zoo", "--family", "werner", "--d", 3, "--beta", -2, check=2)
    run("volume", "--dim", 9, check=2)
    run("protocol", "--name", "qpa", "--p", "0.5,0.5", check=2)


def test_invariant_violation_exit_code(tmp_path):
    bad = tmp_path / "neg.json"
    bad.write_text(json.dumps({"dims": [2], "data": [[2, 0], [0, 0], [0, 0], [-1, 0]]}))
    run("check", bad, check=4)
