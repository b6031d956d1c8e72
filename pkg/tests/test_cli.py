import json
import subprocess
import sys

import pytest

from extorb.cli import run
from extorb.orbits import clear_cache


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys):
    code, out, _ = call(capsys, "classify", "--form", "x^2 + yz", "--m", "3")
    assert code == 0
    assert "triple: (3, 1, 0)" in out and "label:  Phi_3 (odd standard)" in out


def test_imrho_text_and_json(capsys):
    code, out, _ = call(capsys, "imrho", "--class", "xy; yz", "--m", "3", "--n", "2")
    assert code == 0 and "|Im(rho)| = 1 * 1 * 6 = 6" in out and "Omega: S3" in out
    code, out, _ = call(capsys, "imrho", "--class", "xy; yz", "--m", "3", "--n", "2", "--json")
    js = json.loads(out)
    assert js["order"] == "6" and js["breakdown"]["omega"] == "6" and js["elapsed_ms"] is None


def test_catalog_commands(capsys):
    code, out, _ = call(capsys, "catalog", "list")
    assert code == 0 and "u4" in out.split()
    code, out, _ = call(capsys, "catalog", "get", "u5")
    assert code == 0 and "x1*x2; x2*x3; x3*x4" in out
    code, _, err = call(capsys, "catalog", "get", "nope")
    assert code == 2 and err


def test_reproduce_pair_table(capsys):
    code, out, _ = call(capsys, "reproduce", "pair-table")
    assert code == 0 and "27/27 match" in out


@pytest.mark.parametrize("argv", [
    ["classify", "--form", "x^3", "--m", "3"],
    ["imrho", "--class", "xy", "--m", "3", "--n", "2"],
    ["classify", "--form", "xy", "--m", "3", "--p", "4"],
    ["imrho", "--class", "xy", "--m", "3", "--workers", "0"],
    ["nosuchcommand"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_cap_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("EXTORB_CAP", "100")
    code, _, err = call(capsys, "imrho", "--class", "x1*x2; x3*x4", "--m", "4", "--n", "2")
    assert code == 3 and "extorb:" in err


def test_json_identical_across_worker_counts(capsys):
    outs = []
    for w in ("1", "8"):
        clear_cache()
        code, out, _ = call(capsys, "imrho", "--class", "x^2 + yz; xy + xz + y^2", "--m", "3", "--n", "2",
                            "--json", "--workers", w)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "extorb.cli", "classify", "--form", "xy", "--m", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "triple: (2, 0, 1)" in res.stdout
