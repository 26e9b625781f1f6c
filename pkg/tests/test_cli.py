import json
import os
import pathlib
import subprocess
import sys

import pytest

from braidmorita.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES = {
    "classify_h4_l0_k": ["classify", "kmatrices", "--catalog", "H4_l0", "--coideal", "k"],
    "classify_h4_l1_h4": ["classify", "kmatrices", "--catalog", "H4_l1", "--coideal", "H4"],
    "signature_h4_l0_k": ["braidrep", "signature", "--catalog", "H4_l0", "--coideal", "k",
                          "--k", "1⊗1", "--type", "BC", "--n", "2", "--maxlen", "2"],
    "group_classify_s3": ["group", "classify", "--group", "S3", "--u", "e"],
    "distinguish_s3": ["distinguish", "--catalog", "S3_e", "--coideal", "k{e,(12)}", "--k", "1⊗1",
                       "--coideal2", "k{e,(13)}", "--k2", "1⊗1"],
    "verify_k_fail": ["verify", "kmatrix", "--catalog", "H4_l0", "--coideal", "k1+kgx", "--k", "g⊗1"],
}


def run_json(argv, capsys):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, doc = run_json(CASES[name], capsys)
    path = GOLDEN / f"{name}.json"
    if os.environ.get("BRAIDMORITA_REGEN_GOLDEN"):
        path.write_text(json.dumps({"exit": code, "output": doc}, indent=2, ensure_ascii=False) + "\n")
    want = json.loads(path.read_text())
    assert code == want["exit"] and doc == want["output"]


def test_deterministic(capsys):
    argv = CASES["group_classify_s3"]
    assert run_json(argv, capsys) == run_json(argv, capsys)


def test_text_output(capsys):
    assert main(CASES["classify_h4_l0_k"]) == 0
    assert capsys.readouterr().out.strip() == "FINITE: 1⊗1, g⊗1"
    assert main(CASES["distinguish_s3"]) == 0
    assert capsys.readouterr().out.strip() == "EQUIVALENT(conjugacy) [g=(23)]"


def test_exit_codes(capsys):
    assert main(["braidrep", "check", "--catalog", "H4_l0", "--type", "A", "--n", "3"]) == 0
    assert main(CASES["verify_k_fail"]) == 1
    assert main(["verify", "kmatrix", "--catalog", "H4_l0", "--coideal", "nope", "--k", "1⊗1"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error: KeyError:")
    assert main(["--json", "verify", "kmatrix", "--catalog", "H4_l0", "--coideal", "k", "--k", "q⊗1"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "fail"
    assert doc["error"] == {"name": "FormatError",
                            "message": "unknown basis label 'q' in leg 1; have ['1', 'g', 'x', 'gx']"}
    with pytest.raises(SystemExit) as exc:
        main(["braidrep", "frobnicate"])
    assert exc.value.code == 2


def test_type_d_needs_triangular(capsys):
    argv = ["braidrep", "check", "--catalog", "S3_e", "--coideal", "k{e,(123),(132)}",
            "--k", "(123)⊗1", "--type", "D", "--n", "2"]
    assert main(argv) == 1
    assert "NotTriangular" in capsys.readouterr().err


def test_file_round_trip(tmp_path, capsys):
    assert main(["catalog", "export", "H4_l0", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    host = str(tmp_path / "h4_l0.json")
    com = str(tmp_path / "h4_l0__k1_kg.json")
    assert main(["verify", "hopf", "--hopf", host]) == 0
    assert main(["verify", "rmatrix", "--hopf", host]) == 0
    assert main(["verify", "comodule", "--comodule", com]) == 0
    capsys.readouterr()
    code, doc = run_json(["classify", "kmatrices", "--comodule", com], capsys)
    assert code == 0 and doc["result"]["solutions"] == ["1⊗1", "g⊗1"]
    code, doc = run_json(["braidrep", "trace", "--comodule", com, "--k", "g⊗1", "--word", ""], capsys)
    assert doc["result"]["trace"] == "32"


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "braidmorita.cli", "catalog", "list"],
                         capture_output=True, text=True, check=True).stdout.split()
    assert out[0] == "H4_l0" and out[-1] == "S3_e"
