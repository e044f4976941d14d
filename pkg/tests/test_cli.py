import json
import subprocess
import sys

import pytest

from feec_orthant import form_from_json, parse_form
from feec_orthant.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply_hr_example(capsys):
    code, out, _ = run(capsys, "apply", "--op", "hr", "--n", "2", "--r", "1", "y*dx")
    assert code == 0
    assert out.strip() == "y*dx - (x*y/s)*ds"


def test_apply_basis_choice(capsys):
    _, out, _ = run(capsys, "apply", "--op", "hr", "--n", "2", "--r", "1", "--basis", "dx", "y*dx")
    assert parse_form(out.strip(), 2) == parse_form("y*dx - x*y/s*ds", 2)
    assert "ds" not in out


@pytest.mark.parametrize(
    "op, expr, expected",
    [
        ("d", "x*dy", "dx/\\dy"),
        ("star", "dx", "x*dy/\\dz"),
        ("starinv", "x*dy/\\dz", "dx"),
        ("ix", "ds", "x + y + z"),
        ("jx", "dx/\\dy", "y*dx - x*dy"),
        ("dswedge", "dx", "-dx/\\dy - dx/\\dz"),
        ("koszul", "dx", "2/3*x - 1/3*y - 1/3*z"),
        ("sboldd", "x", "(y + z)*dx - x*dy - x*dz"),
        ("boldd", "y*dx/\\ds", "-dx/\\dy/\\dz"),
    ],
)
def test_apply_operators(capsys, op, expr, expected):
    code, out, _ = run(capsys, "apply", "--op", op, "--n", "2", "--basis", "dx", expr)
    assert code == 0
    assert parse_form(out.strip(), 2) == parse_form(expected, 2)


def test_apply_restrict(capsys):
    code, out, _ = run(capsys, "apply", "--op", "restrict", "--n", "2", "s*dx - x*ds")
    assert code == 0 and out.strip() == "dx"


def test_apply_json_roundtrips(capsys):
    _, out, _ = run(capsys, "apply", "--op", "hr", "--n", "2", "--r", "2", "--json", "x^4 + 3*x*y + y^3")
    data = json.loads(out)
    assert form_from_json(data) == parse_form("x^4/s^2 + 3*x*y + y^3/s", 2)


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--n", "2", "--r", "1", "--k", "1", "--space", "Pminus")
    assert code == 0 and out.strip() == "3"
    _, out, _ = run(capsys, "dim", "--n", "2", "--r", "2", "--k", "1", "--space", "ringP", "--json")
    assert json.loads(out)["dim"] == 3


def test_basis_listing(capsys):
    code, out, _ = run(capsys, "basis", "--n", "2", "--r", "1", "--k", "0", "--space", "P")
    assert code == 0
    assert out.splitlines() == ["1: x*ds", "2: y*ds", "3: z*ds"]
    _, out, _ = run(capsys, "basis", "--n", "2", "--r", "0", "--k", "0", "--space", "ringH")
    assert "zero space" in out


def test_basis_json(capsys):
    _, out, _ = run(capsys, "basis", "--n", "2", "--r", "1", "--k", "1", "--space", "Pminus", "--json")
    data = json.loads(out)
    forms = [form_from_json(b) for b in data["basis"]]
    assert len(forms) == 3 and all(f.degree == 1 for f in forms)


def test_pair_report(capsys):
    code, out, _ = run(capsys, "pair", "--n", "2", "--r", "1", "--k", "1")
    assert code == 0
    assert "shape: 3x3" in out and "rank: 3" in out and "nondegenerate: yes" in out


def test_pair_csv_and_json(capsys):
    _, out, _ = run(capsys, "pair", "--n", "1", "--r", "1", "--k", "0", "--family", "P", "--csv")
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert len(rows) == len(rows[0])
    _, out, _ = run(capsys, "pair", "--n", "1", "--r", "1", "--k", "1", "--family", "H", "--json")
    data = json.loads(out)
    assert data["nondegenerate"] and data["rank"] == data["shape"][0]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "apply", "--op", "d", "--n", "2", "y*dq")
    assert code == 1
    assert "unknown variable" in err and "^" in err


def test_domain_error_exit_codes(capsys):
    assert run(capsys, "apply", "--op", "starinv", "--n", "2", "dy/\\dz")[0] == 2
    assert run(capsys, "dim", "--n", "2", "--r", "0", "--k", "0", "--space", "Pminus")[0] == 2
    assert run(capsys, "apply", "--op", "boldd", "--n", "2", "x + y^2")[0] == 2
    assert run(capsys, "apply", "--op", "hr", "--n", "2", "dx")[0] == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1", "--max-r", "2")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_verify_respects_cell_cap(capsys, monkeypatch):
    monkeypatch.setenv("FEEC_MAX_CELLS", "1")
    code, out, err = run(capsys, "verify", "--n", "2", "--max-r", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["max_cells"] == 1
    assert {(c["r"], c["k"]) for c in data["checks"]} == {(0, 0)}
    assert "FEEC_MAX_CELLS" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from feec_orthant.verification import CheckResult

    monkeypatch.setattr(
        "feec_orthant.cli.run_suite",
        lambda n, max_r, cap: iter([CheckResult("broken", n, 0, 0, False, "forced")]),
    )
    code, out, _ = run(capsys, "verify", "--n", "1", "--max-r", "0")
    assert code == 3 and "FAIL broken" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "feec_orthant", "dim", "--n", "2", "--r", "1", "--k", "2", "--space", "Pminus"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
