from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rtk import linalg as la
from rtk.cli import main
from rtk.io import matrix_to_json


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def sl_file(tmp_path):
    path = tmp_path / "sl.json"
    assert main(["build", "--family", "sl", "--n", "2", "--s", "1", "-o", str(path)]) == 0
    return path


def test_build_sl(capsys):
    code, out, _ = run(capsys, "build", "--family", "sl", "--n", "2", "--s", "1")
    assert code == 0
    data = json.loads(out)
    assert data["dim_g"] == 8
    assert data["model"] == {"family": "sl", "n": 2, "s": "1"}


def test_validate_and_classify(capsys, sl_file):
    code, out, _ = run(capsys, "validate", str(sl_file))
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "classify", str(sl_file))
    assert code == 0
    assert json.loads(out)["model_name"] == "SL(3,R)/GL(2,R)"


@pytest.mark.parametrize("flags, family, sig", [
    (["--family", "su", "--n", "2", "--p", "1", "--q", "1"], "su", [1, 1]),
    (["--family", "su", "--n", "3", "--p", "3", "--q", "0", "--s", "1/2"], "su", [3, 0]),
    (["--family", "nilpotent", "--n", "3", "--rank", "2", "--p", "1"], "nilpotent", [1, 1]),
    (["--family", "zero", "--n", "2", "--rank", "1", "--q", "1"], "nilpotent", [0, 1]),
])
def test_round_trip(capsys, tmp_path, flags, family, sig):
    path = tmp_path / "t.json"
    assert main(["build", *flags, "-o", str(path)]) == 0
    code, out, _ = run(capsys, "classify", str(path))
    rep = json.loads(out)
    assert code == 0
    assert rep["family"] == family
    assert rep["signature"] == sig


def test_validate_failure(capsys, tmp_path, sl_file):
    data = json.loads(sl_file.read_text())
    data["k_basis"][0] = matrix_to_json(la.identity(4))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert "omega_invariant" in json.loads(out)["failures"]
    code, out, _ = run(capsys, "classify", str(bad))
    assert code == 1


def test_decompose_zero(capsys, tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"n": 2, "R": {}}))
    code, out, _ = run(capsys, "decompose", str(path))
    data = json.loads(out)
    assert code == 0
    assert data["lambda"] == "0"
    assert data["is_ricci_type"] is True
    assert all(x == "0" for m in data["W"].values() for row in m for x in row)
    assert list(data) == ["ricci", "A", "lambda", "W", "is_ricci_type"]


def test_validate_curvature(capsys, tmp_path):
    m = la.zeros(4)
    m[0][2] = la.ONE
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"n": 2, "R": {"0,1": matrix_to_json(m)}}))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert json.loads(out)["failures"]


def test_product_check(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"A1": [[0, 0], [0, 0]], "A2": [[1, 0], [0, -1]]}))
    code, out, _ = run(capsys, "product-check", str(path))
    data = json.loads(out)
    assert code == 0
    assert data["W_is_zero"] is False and data["equivalence_holds"] is True
    assert data["cross_12"]["0,1"][2:] == [["1/3", "0"], ["0", "-1/3"]]


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--dim", "4")
    data = json.loads(out)
    assert code == 0 and len(data) == 9
    assert sum(e["report"]["compact"] for e in data) == 1


@pytest.mark.parametrize("args", [
    ["build", "--family", "sl"],
    ["build", "--family", "su", "--n", "2", "--p", "2", "--q", "2"],
    ["build", "--family", "sl", "--n", "2", "--s", "x"],
    ["catalog", "--dim", "5"],
    ["nonsense"],
    [],
])
def test_bad_flags(capsys, args):
    assert main(args) == 2


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    assert main(["classify", str(path)]) == 2
    path.write_text(json.dumps({"k_basis": []}))
    assert main(["classify", str(path)]) == 2
    assert main(["decompose", str(tmp_path / "missing.json")]) == 2
    path.write_text(json.dumps({"A1": [[1]], "A2": [[0, 0], [0, 0]]}))
    assert main(["product-check", str(path)]) == 2


def test_max_dim(capsys, monkeypatch):
    monkeypatch.setenv("RTK_MAX_DIM", "4")
    assert main(["build", "--family", "sl", "--n", "3"]) == 2
    assert main(["build", "--family", "sl", "--n", "2"]) == 0
    monkeypatch.setenv("RTK_MAX_DIM", "many")
    assert main(["build", "--family", "sl", "--n", "2"]) == 2


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "rtk", "build", "--family", "nilpotent", "--n", "2",
           "--rank", "2", "--p", "1"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_selftest_subset(capsys):
    code, out, err = run(capsys, "selftest", *[a for k in (1, 2, 3, 5, 7, 9) for a in ("--skip", str(k))])
    data = json.loads(out)
    assert code == 0
    assert data["passed"] == 3 and data["failed"] == 0
    assert "[PASS] criterion 8" in err
