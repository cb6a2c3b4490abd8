import json
from pathlib import Path
import subprocess
import sys

import pytest

from padicmontel.cli import main, run_command

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["--json", "period", "--m", "1", "square.json"], "period_square.json"),
    (["--json", "gallery", "nonuniform", "--p", "2", "--m", "1", "--eval", "1/4"],
     "gallery_nonuniform.json"),
    (["--json", "verify-djokovic", "--p", "3", "--s", "3", "--trials", "100", "--seed", "42"],
     "verify_djokovic.json"),
]


@pytest.fixture
def in_data(monkeypatch):
    monkeypatch.chdir(DATA)


def run(argv):
    code, report, machine = run_command(argv)
    return code, report.render(machine) if report else ""


@pytest.mark.parametrize("argv, golden", GOLDEN_CASES)
def test_golden(in_data, argv, golden):
    code, out = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_human_output(in_data):
    assert run(["period", "--m", "1", "square.json"]) == (0, "classification: Zero\n")
    assert run(["gallery", "nonuniform", "--p", "2", "--m", "1", "--eval", "1/4"]) == (0, "1\n")
    code, out = run(["verify-djokovic", "--p", "3", "--s", "3", "--trials", "100", "--seed", "42"])
    assert (code, out) == (0, "100/100 exact matches\n")


def test_json_flag_after_subcommand(in_data):
    code, out = run(["period", "--json", "--m", "1", "square.json"])
    assert json.loads(out)["results"]["classification"] == "Zero"


def test_determinism(in_data):
    argv = ["--json", "decompose", "--x0", "1/3", "--m", "2", "mixed_3adic.json"]
    assert run(argv) == run(argv)
    a = run(["--json", "verify-djokovic", "--p", "5", "--s", "4", "--trials", "20", "--seed", "7"])
    b = run(["--json", "verify-djokovic", "--p", "5", "--s", "4", "--trials", "20", "--seed", "7"])
    assert a == b and a[0] == 0


def test_period_ball_with_witness(in_data):
    code, out = run(["--json", "period", "--m", "0", "jacobi_2_1.json"])
    res = json.loads(out)["results"]
    assert code == 0
    assert (res["classification"], res["N0"]) == ("Ball", 1)
    assert res["witness"] == {"x": "0", "h": "1"}


def test_certify_exit_codes(in_data):
    assert run(["certify", "--h0", "2", "--m", "0", "jacobi_2_1.json"])[0] == 0
    assert run(["certify", "--h0", "1", "--m", "0", "jacobi_2_1.json"])[0] == 1
    code, out = run(["--json", "certify", "--h0", "2", "--m", "1", "square.json"])
    assert code == 1 and json.loads(out)["results"]["failures"]


def test_reconstruct(in_data):
    code, out = run(["--json", "reconstruct", "--x0", "1/3", "--h0", "1", "--m", "2",
                     "--verify", "5", "mixed_3adic.json"])
    assert code == 0
    assert json.loads(out)["results"]["polynomial"] == {"coeffs": ["0", "0", "1"]}
    code, out = run(["--json", "reconstruct", "--x0", "0", "--h0", "1/3", "--m", "2",
                     "--verify", "3", "mixed_3adic.json"])
    assert code == 1 and json.loads(out)["results"]["ok"] is False


def test_decompose(in_data):
    code, out = run(["--json", "decompose", "--x0", "1/3", "--m", "2", "mixed_3adic.json"])
    res = json.loads(out)["results"]
    assert code == 0 and res["ok"]
    assert res["decomposition"]["A0"] == "1/9"
    assert res["decomposition"]["valid_level"] == 1
    assert all(s["residual"] == "0" for s in res["verification"]["samples"])
    # m = 1 is too small for t^2 pieces
    assert run(["decompose", "--x0", "1/3", "--m", "1", "mixed_3adic.json"])[0] == 1


def test_gallery_jacobi(in_data):
    code, out = run(["--json", "gallery", "jacobi", "--p", "3", "--N", "2"])
    res = json.loads(out)["results"]
    assert res["period_group"] == "Ball(2)"
    assert run(["gallery", "jacobi", "--p", "3", "--N", "2", "--eval", "3"]) == (0, "0\n")


@pytest.mark.parametrize("argv", [
    [],
    ["period", "square.json"],
    ["period", "--m", "1", "missing.json"],
    ["gallery", "jacobi", "--p", "4", "--N", "1"],
    ["gallery", "jacobi", "--p", "2"],
    ["gallery", "nonuniform", "--p", "2", "--m", "1", "--eval", "1/0"],
    ["verify-djokovic", "--p", "3", "--s", "0"],
    ["verify-djokovic", "--p", "3", "--s", "2", "--seed", "-1"],
])
def test_usage_errors_exit_2(in_data, argv, capsys):
    assert run(argv)[0] == 2


def test_bad_file_exit_2(tmp_path, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p":4,"level":0,"pieces":[],"default":{"coeffs":["0"]}}')
    code, out = run(["period", "--m", "1", str(bad)])
    assert code == 2 and "not a supported prime" in out


def test_main_writes_stdout(in_data, capsys):
    assert main(["gallery", "nonuniform", "--p", "2", "--m", "1", "--eval", "1/4"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_module_entry_point(in_data):
    proc = subprocess.run([sys.executable, "-m", "padicmontel", "period", "--m", "1", "square.json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "classification: Zero\n"
