import json

from rmm.cli import main
from conftest import FIXTURE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_curve_command(capsys):
    code, out, _ = run(capsys, "curve", "--a-invariants",
                       "0,0,0,-11346507,16371897606")
    assert code == 0
    data = json.loads(out)
    assert data["minimal_signature"] == [420241, -303183289, -10245657600000]
    assert data["u"] == 6
    assert data["rmm"] == 7
    assert data["rmm_triple"] == [1, 0, 0]
    assert data["reduced_model"] == [1, 0, 0, -8755, 350177]
    assert data["reduction"] == {"2": "multiplicative", "3": "multiplicative"}


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "--torsion", "C12", "--a", "6", "--b", "11")
    assert code == 0
    data = json.loads(out)
    assert data["rmm"] == 10
    assert data["u"] == 2
    assert data["minimal_signature"][:2] == [
        44115712857085761, -9246342494619021684087009]
    assert data["reduced_model"] == [
        1, -1, 1, -919077351189287, 10701785524467279561311]
    assert data["torsion"] == "C12"


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "--torsion", "C10", "--bound", "6")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == []
    assert data["allowed"] == [7]
    assert set(data["counts"]) == {"7"}


def test_residues_command(capsys):
    code, out, _ = run(capsys, "residues", "--torsion", "C3_0",
                       "--modulus", "24", "--samples", "2")
    assert code == 0
    data = json.loads(out)
    assert data["inconsistent"] == []
    assert set(data["observed_indices"]) <= {1, 2, 5, 6, 7, 8, 9, 10}


def test_verify_c2c2_command(capsys):
    code, out, _ = run(capsys, "verify-c2c2")
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_stats_command_json(capsys):
    code, out, _ = run(capsys, "stats", "--input", str(FIXTURE))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 21  # 20 curves plus the report
    report = json.loads(lines[-1])
    assert report["skipped"] == []
    assert report["report"]["C10"] == {"n": 2, "counts": {"7": 2}}
    first = json.loads(lines[0])
    assert first["torsion"] == "C5" and first["rmm"] == 4


def test_stats_command_tsv(capsys):
    code, out, _ = run(capsys, "stats", "--input", str(FIXTURE), "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t")[:2] == ["T", "n_T"]
    c10 = next(l for l in lines if l.startswith("C10\t"))
    cells = c10.split("\t")
    assert cells[1] == "2"
    assert cells[2 + 6] == "100.0%"  # R7 column
    assert cells[2] == "0.0%"


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "curve", "--a-invariants", "1,2,3")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "curve", "--a-invariants", "0,0,0,0,0")
    assert code == 2
    code, _, err = run(capsys, "family", "--torsion", "C5", "--a", "2", "--b", "4")
    assert code == 2
    code, _, err = run(capsys, "stats", "--input", "/nonexistent/file")
    assert code == 2
