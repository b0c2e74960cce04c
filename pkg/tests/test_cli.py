import io
import json
import subprocess
import sys

import pytest

from nilrev.cli import main


def run(argv, capsys, monkeypatch=None, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_reverse_n2(capsys):
    code, out, _ = run(["reverse", "--ring", "rat", "--method", "induction", "-m", "0,1;0,0"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["g"] == "1,0;0,-1" and doc["involution"] and doc["verified"]


def test_reverse_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["reverse", "--plain"], capsys, monkeypatch, stdin="ring=gauss n=2\n0,i;0,0\n")
    assert code == 0
    assert out.splitlines() == ["g = 1,0;0,-1", "involution = true", "verified = true"]


def test_reverse_parity_odd_cycle(capsys):
    code, out, _ = run(["reverse", "--method", "parity", "-m", "0,1,1;0,0,1;0,0,0"], capsys)
    report = json.loads(out)
    assert code == 2 and report["status"] == "infeasible"
    assert {tuple(e) for e in report["cycle"]} == {(1, 2), (2, 3), (1, 3)}


def test_reverse_parity_success(capsys):
    code, out, _ = run(["reverse", "--method", "parity", "-m", "0,1,1;0,0,0;0,0,0"], capsys)
    assert code == 0 and json.loads(out)["g"] == "1,0,0;0,-1,0;0,0,-1"


def test_reverse_malformed(capsys):
    code, out, err = run(["reverse", "-m", "0,1;0"], capsys)
    assert code == 1 and out == ""
    assert "line 1, column 5" in err


def test_reverse_not_star(capsys):
    code, out, _ = run(["reverse", "-m", "0,0;0,0"], capsys)
    assert code == 2 and json.loads(out)["error"] == "NotStar"


def test_reverse_oracle(capsys):
    code, out, _ = run(["reverse", "--method", "oracle", "--group", "unipotent", "-m", "0,1;0,0"], capsys)
    assert code == 2 and json.loads(out)["status"] == "infeasible"
    code, out, _ = run(["reverse", "--method", "oracle", "-m", "0,1,0;0,0,0;0,0,0"], capsys)
    assert code == 0 and json.loads(out)["produced_by"] == "oracle"


def test_reverse_group_level(capsys):
    code, out, _ = run(["reverse", "--level", "group", "-m", "1,1,1/2;0,1,1;0,0,1"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["level"] == "group" and doc["verified"]


def test_check_roundtrip_and_tamper(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run(["reverse", "--ring", "quat", "-m", "0,i,0;0,0,j;0,0,0", "-o", str(path)], capsys)
    assert code == 0
    code, out, _ = run(["check", str(path)], capsys)
    assert code == 0 and json.loads(out) == {"valid": True}

    doc = json.loads(path.read_text())
    doc["g"] = "1,1,0;0,-1,0;0,0,1"
    edited = tmp_path / "edited.json"
    edited.write_text(json.dumps(doc))
    code, out, _ = run(["check", "--plain", str(edited)], capsys)
    assert code == 2 and out.strip() == "INVALID"

    truncated = tmp_path / "truncated.json"
    truncated.write_text(path.read_text()[:40])
    code, _, err = run(["check", str(truncated)], capsys)
    assert code == 1 and err.startswith("error:")


def test_check_malformed_certificate(capsys, tmp_path):
    path = tmp_path / "cert.json"
    run(["reverse", "-m", "0,1;0,0", "-o", str(path)], capsys)
    doc = json.loads(path.read_text())
    doc["group"] = "unipotent"
    path.write_text(json.dumps(doc))
    code, _, err = run(["check", str(path)], capsys)
    assert code == 1 and "malformed" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(["check", str(tmp_path / "nope.json")], capsys)
    assert code == 1 and err


def test_exp_log_jordan(capsys):
    code, out, _ = run(["exp", "-m", "0,1,0;0,0,1;0,0,0"], capsys)
    assert code == 0 and out.strip() == "1,1,1/2;0,1,1;0,0,1"
    code, out, _ = run(["log", "-m", "1,1,1/2;0,1,1;0,0,1"], capsys)
    assert code == 0 and out.strip() == "0,1,0;0,0,1;0,0,0"
    code, out, _ = run(["jordan", "-m", "0,0,1;0,0,0;0,0,0"], capsys)
    assert code == 0 and out.splitlines()[0] == "[2^1, 1^1]"
    code, out, _ = run(["jordan", "--json", "-m", "0,0,1;0,0,0;0,0,0"], capsys)
    assert json.loads(out)["partition"] == "[2^1, 1^1]"
    code, out, _ = run(["log", "-m", "1,0;0,-1"], capsys)
    assert code == 2


def test_oracle_command(capsys):
    code, out, _ = run(["oracle", "--group", "unipotent", "--level", "group", "-m", "1,1;0,1"], capsys)
    assert code == 2 and json.loads(out)["status"] == "INFEASIBLE"
    code, out, _ = run(["oracle", "--level", "group", "--full", "-m", "1,1;0,1"], capsys)
    data = json.loads(out)
    assert code == 0 and data["g"] == "-1,0;0,1"  # full Gray order flips eps_1 first


def test_oracle_dim_limit_env(capsys, monkeypatch):
    monkeypatch.setenv("NILREV_DIM_LIMIT", "2")
    code, out, _ = run(["oracle", "-m", "0,1,0;0,0,1;0,0,0"], capsys)
    assert code == 2 and json.loads(out)["error"] == "DimensionTooLarge"


def test_search_command(capsys):
    code, out, _ = run(["search", "--n", "2", "--budget", "20"], capsys)
    data = json.loads(out)
    assert code == 0 and data["sampled"] == 20 and data["infeasible"] == []
    code, out, _ = run(["search", "--n", "3", "--budget", "0"], capsys)
    assert json.loads(out)["sampled"] == 0


def test_campaign_examples(capsys):
    code, out, _ = run(["campaign", "--trials", "0"], capsys)
    assert code == 0 and json.loads(out)["successes"] == 0
    args = ["campaign", "--mode", "thm11", "--ring", "rat", "--n-max", "5", "--trials", "200", "--seed", "7"]
    code, first, _ = run(args, capsys)
    assert code == 0 and json.loads(first)["successes"] == 200
    _, second, _ = run(args, capsys)
    assert first == second


def test_campaign_thm14_quat(capsys):
    args = ["campaign", "--mode", "thm14", "--ring", "quat", "--n-max", "8", "--trials", "200", "--seed", "7"]
    code, out, _ = run(args, capsys)
    assert code == 0 and json.loads(out)["successes"] == 200


def test_entry_point_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "nilrev.cli", "exp", "-m", "0,2;0,0"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1,2;0,1"
