import json
import shutil
import subprocess
import sys

import pytest

from chordskein.algebra import AlgebraElem
from chordskein.cli import run_command
from chordskein.expr import parse_element
from chordskein.rewrite import normalize


def test_normalize_ptolemy():
    code, out, _ = run_command(["normalize", "-n", "4", "b(1,3)*b(2,4)"])
    assert code == 0
    assert out.strip() == "Q^2*b(1,4)*b(2,3) + Q^-2*b(1,2)*b(3,4)"


def test_normalize_json_and_q1():
    code, out, _ = run_command(["normalize", "-n", "4", "--json", "b(2,4)*b(1,3)"])
    assert code == 0
    elem = AlgebraElem.from_json(json.loads(out))
    assert elem == normalize(parse_element("b(2,4)*b(1,3)", 4))
    code, out, _ = run_command(["normalize", "-n", "4", "--q1", "b(1,3)*b(2,4)"])
    assert out.strip() == "b(1,4)*b(2,3) + b(1,2)*b(3,4)"


def test_delta_outputs():
    assert run_command(["delta", "-n", "2"])[1].strip() == "v(1)*v(2)*b(1,2)^2 - 2"
    closed = run_command(["delta", "-n", "4"])[1]
    inv = run_command(["delta", "-n", "4", "--method", "inversion"])[1]
    assert closed == inv


def test_eq_exit_codes():
    assert run_command(["eq", "-n", "4", "b(1,3)*b(2,4)",
                        "q*b(1,4)*b(2,3) + q^-1*b(1,2)*b(3,4)"])[0] == 0
    assert run_command(["eq", "-n", "4", "b(1,3)", "b(2,4)"])[0] == 1


def test_gamma_eta_bar():
    assert run_command(["gamma", "-n", "3", "1", "2"])[1].strip() == "b(1,2)"
    assert run_command(["gamma", "-n", "3", "+", "1", "2"])[1].strip() == "b(1,2)"
    assert run_command(["gamma", "-n", "3", "-", "1", "2"])[1].strip() == (
        "Q^-1*v(3)*b(1,3)*b(2,3) - Q^-2*b(1,2)")
    assert run_command(["eta", "-n", "4", "1", "3", "3"])[1].strip() == "b(1,3)"
    assert run_command(["bar", "-n", "3", "Q*b(1,2)"])[1].strip() == "Q^-1*b(1,2)"


def test_basis():
    assert run_command(["basis", "-n", "4", "-d", "2", "--count"])[1].strip() == "20"
    code, out, _ = run_command(["basis", "-n", "3", "-d", "1"])
    assert out.split() == ["b(1,2)", "b(1,3)", "b(2,3)"]
    assert run_command(["basis", "-n", "3", "-d", "0"])[1].strip() == "1"


def test_export(tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run_command(["export-relations", "-n", "3", "-o", str(path)])
    assert code == 0
    assert json.loads(path.read_text())["counts"]["QCOMM2"] == 3
    code, _, err = run_command(["export-relations", "-n", "3", "-o", str(tmp_path / "no" / "r")])
    assert code == 2 and "cannot write" in err


def test_verify():
    code, out, _ = run_command(["verify", "-n", "4", "--suite", "all"])
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["normalize", "b(1,2)"],
    ["normalize", "-n", "4", "b(1,1)"],
    ["normalize", "-n", "1", "1"],
    ["normalize", "-n", "4", "b(1,2"],
    ["gamma", "-n", "4", "*", "1", "2"],
    ["eta", "-n", "4", "1", "4", "3"],
    ["verify", "-n", "4", "--suite", "nope"],
])
def test_usage_errors(argv):
    code, out, err = run_command(argv)
    assert code == 2
    assert out == ""
    assert err


def test_console_script():
    exe = shutil.which("chordskein")
    cmd = [exe] if exe else [sys.executable, "-m", "chordskein.cli"]
    proc = subprocess.run(cmd + ["verify", "-n", "5"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
