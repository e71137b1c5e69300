import json
import subprocess
import sys

from sytmaj.cli import main


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "sytmaj.cli", *args], capture_output=True, text=True
    )


def test_fakedeg_shape(capsys):
    assert main(["fakedeg", "--shape", "4,2"]) == 0
    out = capsys.readouterr().out.strip()
    assert json.loads(out) == {"offset": 2, "coeffs": ["1", "1", "2", "1", "2", "1", "1"]}


def test_fakedeg_blocks(capsys):
    assert main(["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "1"]) == 0
    wreath = json.loads(capsys.readouterr().out)
    assert wreath["offset"] == 6
    assert main(["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "2"]) == 0
    gmdn = json.loads(capsys.readouterr().out)
    assert gmdn["offset"] == 4
    assert wreath != gmdn


def test_fakedeg_text_format(capsys):
    assert main(["fakedeg", "--shape", "4,2", "--format", "text"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "q^2 + q^3 + 2*q^4 + q^5 + 2*q^6 + q^7 + q^8"


def test_deformed(capsys):
    assert main(["deformed", "--alpha", "2,1,1,1", "--d", "2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["offset"] == 6
    assert obj["coeffs"][::2] == ["1", "1", "3", "3", "6", "5", "8", "6", "8", "5", "6", "3", "3", "1", "1"]


def test_support(capsys):
    assert main(["support", "--shape", "2,2"]) == 0
    assert json.loads(capsys.readouterr().out) == {"degrees": [2, 4]}
    assert main(["support", "--shape", "2,2", "--verify"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["equal"] is True and rep["actual"] == [2, 4]


def test_enumerate(capsys):
    assert main(["enumerate", "--shape", "3,2", "--stats", "maj,des"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    assert lines[0] == "1,2,3/4,5 maj=3 des=1"


def test_poset_outputs(capsys):
    assert main(["poset", "--shape", "3,2,1", "--order", "weak", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.count("[maj=") == 16
    assert main(["poset", "--shape", "3,2", "--order", "strong", "--format", "json"]) == 0
    adj = json.loads(capsys.readouterr().out)
    assert len(adj) == 5


def test_verify_suite(capsys):
    assert main(["verify", "--suite", "regression", "--threads", "1"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_verify_small_bounds(capsys):
    assert main(["verify", "--suite", "phi", "--max-n", "5", "--threads", "1"]) == 0
    assert main(["verify", "--suite", "stanley", "--max-n", "6", "--threads", "2"]) == 0
    capsys.readouterr()


def test_verify_all_suites_wired(capsys):
    # every suite runs through the CLI at tiny bounds
    assert main(["verify", "--suite", "all", "--max-n", "4", "--threads", "1"]) == 0
    out = capsys.readouterr().out
    for tag in ("stanley", "support-a", "phi", "poset", "des", "regression",
                "deformed", "gmdn", "closed-forms", "performance", "parity"):
        assert f"[{tag}]" in out, tag


def test_argument_errors_exit_2():
    assert run_cli(["fakedeg"]).returncode == 2
    assert run_cli(["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "3"]).returncode == 2
    assert run_cli(["deformed", "--alpha", "2,1,1", "--d", "2"]).returncode == 2
    assert run_cli(["enumerate", "--shape", "3,2", "--stats", "bogus"]).returncode == 2


def test_output_determinism():
    a = run_cli(["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "2"])
    b = run_cli(["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "2"])
    assert a.stdout == b.stdout and a.returncode == 0
    c = run_cli(["poset", "--shape", "3,2,1", "--order", "weak", "--format", "dot"])
    d = run_cli(["poset", "--shape", "3,2,1", "--order", "weak", "--format", "dot"])
    assert c.stdout == d.stdout
