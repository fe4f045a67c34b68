import json
import subprocess
import sys

import pytest

from covolume.cli import main

PW = "2*t0^7*t1^2 + 2*t0^6*t1^3 + 2*t0^6*t1^2*t2 + 2*t0^5*t1^4 + 4*t0^5*t1^3*t2 + 6*t0^4*t1^4*t2"
PCOUN = "t0*t1 + t1^2 + t1*t2 + t1*t3 + t2*t3"
CUBICS_R = "1, 40, 720, 7680, 53760, 258000, 858720, 1946790, 2807100, 2053600"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_lorentzian_witness(capsys):
    _, normalized, _ = run(capsys, "transform", "normalize", PW)
    code, out, _ = run(capsys, "check", "lorentzian", normalized.strip())
    assert code == 1
    assert json.loads(out)["witness"]["alpha"] == [5, 2, 0]


def test_check_mconvex_witness(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text(PCOUN)
    code, out, _ = run(capsys, "check", "mconvex", str(path))
    w = json.loads(out)["witness"]
    assert code == 1 and (w["alpha"], w["beta"]) == ([1, 1, 0, 0], [0, 0, 1, 1])


def test_check_logconcave_list(capsys):
    assert run(capsys, "check", "logconcave", CUBICS_R)[0] == 0
    assert run(capsys, "check", "logconcave", "1, 0, 1")[0] == 1
    assert run(capsys, "check", "ultralc", "1, 3, 3")[0] == 1


def test_check_sectional_and_covol2(capsys):
    code, out, _ = run(capsys, "check", "sectional", PCOUN)
    assert code == 1 and json.loads(out)["status"] == "CounterexampleFound"
    assert run(capsys, "check", "covol2", "t0^2 + 3*t0*t1 + 3*t1^2")[0] == 0
    assert run(capsys, "check", "covol2", "t0*t1*t2")[0] == 2


def test_transforms(capsys):
    code, out, _ = run(capsys, "transform", "flip", PW, "--degrees", "7,4,1")
    assert code == 0
    assert out.strip() == "6*t0^3 + 4*t0^2*t1 + 2*t0^2*t2 + 2*t0*t1^2 + 2*t0*t1*t2 + 2*t1^2*t2"
    assert run(capsys, "transform", "normalize", "7")[1].strip() == "7"
    out = run(capsys, "transform", "subst", PCOUN, "--matrix", "4,0;1,0;0,1;0,1")[1]
    assert out.strip() == "5*t0^2 + 2*t0*t1 + t1^2"
    assert run(capsys, "transform", "homogenize", "1 + t0^2")[1].strip() == "t0^2 + t1^2"
    assert run(capsys, "transform", "diag", "1 + t0 + t1")[1].strip() == "2*t0 + 1"
    code, out, _ = run(capsys, "transform", "dehomogenize", "t0^2 + t1^2", "--format", "json")
    assert json.loads(out)["num_vars"] == 1


def test_adjoint(capsys, tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"ambient_dim": 3, "rays": [["1", "0", "0"], ["1", "-1", "0"],
                                                            ["1", "0", "-1"], ["1", "-1", "-1"]]}))
    code, out, _ = run(capsys, "adjoint", str(path))
    rep = json.loads(out)
    assert code == 0 and rep["adjoint"] == "2*t0 - t1 - t2" and rep["num_pieces"] == 2
    code, out, _ = run(capsys, "adjoint", str(path), "--regular-seed", "3")
    assert json.loads(out)["adjoint"] == "2*t0 - t1 - t2"
    path.write_text(json.dumps({"ambient_dim": 2, "rays": [["1", "0"], ["-1", "0"], ["0", "1"]]}))
    assert run(capsys, "adjoint", str(path))[0] == 2


def test_segre(capsys):
    code, out, _ = run(capsys, "segre", "x1, x2, x3", "--series-order", "4")
    rep = json.loads(out)
    assert rep["text"]["P"] == "t0*t1*t2"
    terms = {tuple(t["exp"]): t["coef"] for t in rep["series"]["terms"]}
    assert terms[(2, 1, 1)] == "-1"
    code, out, _ = run(capsys, "segre", '{"num_factors": 2, "exponents": [[2, 3]]}', "--oracle")
    rep = json.loads(out)
    assert rep["text"]["R_full"] == "1" and rep["oracle"]["relative_error"] < 1e-2


@pytest.mark.parametrize("argv", [
    ["check", "lorentzian", "t0^"],
    ["check", "lorentzian", "t0^2 + t1"],
    ["transform", "flip", "t0^3", "--degrees", "2"],
    ["transform", "flip", "t0^3"],
    ["segre", "x0*x1"],
    ["segre", "{not json"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_scan_and_fixtures(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, err = run(capsys, "scan", "--count", "6", "--seed", "3", "--out", str(out), "--no-timing")
    assert code == 0 and "suite 6/6" in err
    first = out.read_text()
    run(capsys, "scan", "--count", "6", "--seed", "3", "--out", str(out), "--no-timing", "--workers", "2")
    assert out.read_text() == first
    code, text, _ = run(capsys, "fixtures")
    assert code == 0 and "FAIL" not in text


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "covolume", "segre", "x1*x2, x1*x3", "--series-order", "3"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["codim"] == 1
