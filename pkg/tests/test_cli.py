import json
import subprocess
import sys

import pytest

from canforge.cli import run

from conftest import GENUS14


def cli(*argv, stdin=None):
    p = subprocess.run(
        [sys.executable, "-m", "canforge", *argv], input=stdin, capture_output=True, text=True, timeout=120
    )
    return p.returncode, p.stdout, p.stderr


def test_toric_ideal_session():
    code, out, err = cli("toric-ideal", "--poly", "(0,1) (7,0) (2,4)")
    assert code == 0
    assert "quadrics: 55" in out and "cubics: 1" in out
    assert err.startswith("Time:")


def test_canonical_session():
    code, out, err = cli("canonical-ideal", "--field", "q", GENUS14)
    assert code == 0
    assert "genus: 14" in out
    assert "quadrics: 66" in out
    assert "chi identity: verified" in out


def test_genus_refusal():
    code, out, _ = cli("genus", "x + y + 1")
    assert code == 2
    assert out.startswith("refused: genus_too_small")


def test_json_refusal_reason():
    code, out, _ = cli("canonical-ideal", "--output", "json", "y^2 + x^7 + x + 1")
    assert code == 2
    assert json.loads(out)["reason"] == "hyperelliptic"


def test_degenerate_refusal():
    code, out, _ = cli("canonical-ideal", "x^4 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4 + x + 1")
    assert code == 2 and "degenerate" in out


def test_parse_error_position():
    code, out, _ = cli("genus", "--output", "json", "x + y ++ 1")
    obj = json.loads(out)
    assert code == 2 and obj["reason"] == "parse_error" and obj["column"] == 8


def test_unknown_flag_rejected():
    code, _, err = cli("genus", "--bogus", "x")
    assert code == 2 and "unrecognized" in err


def test_stdin_and_file(tmp_path):
    code, out, _ = cli("genus", "-", stdin=GENUS14 + "\n")
    assert code == 0 and "genus: 14" in out
    path = tmp_path / "f.txt"
    path.write_text("# genus 14 example\n" + GENUS14 + "\n")
    code, out, _ = cli("genus", str(path))
    assert "genus: 14" in out


def test_byte_identical_output():
    a = cli("canonical-ideal", "--output", "json", GENUS14)[1]
    b = cli("canonical-ideal", "--output", "json", GENUS14)[1]
    assert a == b
    s1 = cli("sample-points", "--seed", "5", GENUS14)[1]
    s2 = cli("sample-points", "--seed", "5", GENUS14)[1]
    assert s1 == s2


def test_seed_env(monkeypatch, capsys):
    monkeypatch.setenv("CANFORGE_SEED", "9")
    assert run(["sample-points", "--output", "json", "--count", "3", GENUS14]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 9


def test_verify_roundtrip(tmp_path):
    gens = tmp_path / "gens.json"
    code, out, _ = cli("canonical-ideal", "--output", "json", GENUS14)
    gens.write_text(out)
    code, out, _ = cli("verify", "--generators", str(gens), "--count", "60", GENUS14)
    assert code == 0, out
    assert "FAIL" not in out


def test_verify_detects_corruption(tmp_path):
    code, out, _ = cli("canonical-ideal", "--output", "json", GENUS14)
    data = json.loads(out)
    data["generators"][-1]["terms"][0]["coeff"] += 1
    gens = tmp_path / "bad.json"
    gens.write_text(json.dumps(data))
    code, out, _ = cli("verify", "--generators", str(gens), "--count", "60", GENUS14)
    assert code == 2
    assert "FAIL vanishing" in out


def test_polygon_info(capsys):
    assert run(["polygon-info", "--output", "json", "--poly", "(0,0) (3,0) (0,3) (3,3)"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["lattice_points"] == 16 and info["interior_points"] == 4
    assert info["ehrhart"][0] == 16


def test_check_nondegenerate(capsys):
    assert run(["check-nondegenerate", "x^2 + 2*x*y + y^2 + x + y"]) == 0
    out = capsys.readouterr().out
    assert "status: Degenerate" in out and "witness" in out


def test_cas_output(capsys):
    assert run(["toric-ideal", "--output", "cas", "--cas", "m2", "--field", "fp:101", "--poly", "(0,0) (1,0) (0,1) (1,1)"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("R = ZZ/101[")


def test_field_fp(capsys):
    assert run(["canonical-ideal", "--field", "fp:10007", "--output", "json", GENUS14]) == 0
    data = json.loads(capsys.readouterr().out)
    assert "10007" in data["field"]
    assert data["quadric_count"] == 66
