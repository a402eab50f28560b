from __future__ import annotations

import json
import subprocess
import sys

import pytest

from packedwords import suites
from packedwords.cli import main, parse_q
from packedwords.hopf import perturbed_family


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_op_middle_symbolic(capsys):
    code, out, _ = run(capsys, "op", "--kind", "middle", "--q", "q", "2,1,1", "1,2")
    assert code == 0
    assert out.strip() == "q(2,1,1,1,2) + (3,1,1,2,3) + (3,2,2,1,3)"


@pytest.mark.parametrize("q, expected", [
    ("0", "(3,1,1,2,3) + (3,2,2,1,3)"),
    ("2", "2(2,1,1,1,2) + (3,1,1,2,3) + (3,2,2,1,3)"),
    ("1/2", "1/2(2,1,1,1,2) + (3,1,1,2,3) + (3,2,2,1,3)"),
])
def test_op_specialized(capsys, q, expected):
    code, out, _ = run(capsys, "op", "--kind", "middle", "--q", q, "2,1,1", "1,2")
    assert code == 0 and out.strip() == expected


def test_op_json(capsys):
    code, out, _ = run(capsys, "op", "--kind", "right", "--format", "json", "2,1,1", "1,2")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 5
    assert {"coeff": [0, 1], "word": [2, 1, 1, 1, 3]} in data["terms"]


@pytest.mark.parametrize("kind, expected", [
    ("concat", "(2,1,3)"), ("backslash", "(3,2,1)"), ("dot", "(2,1,2)"),
    ("shuffle", "(2,1,3) + (3,1,2) + (3,2,1)"),
])
def test_op_kinds(capsys, kind, expected):
    code, out, _ = run(capsys, "op", "--kind", kind, "2,1", "1")
    assert code == 0 and out.strip() == expected


def test_coproduct_and_primitive(capsys):
    code, out, _ = run(capsys, "coproduct", "3,4,2,5,1,1,3,5")
    assert code == 0 and "(2,1,1)⊗(1,2,3,1,3)" in out
    code, out, _ = run(capsys, "primitive", "2,3,1")
    assert out.strip() == "-(2,1,3) + (2,3,1)"
    code, out, _ = run(capsys, "primitive", "--format", "json", "1,2")
    assert json.loads(out)["input_primitive"] is False


def test_eta_and_psi(capsys):
    assert run(capsys, "eta", "2,1")[1].strip() == "-(1,2) + (2,1)"
    assert run(capsys, "psi", "2,4,3,1")[1].strip() == \
        "(2,1,3,4) - (2,1,4,3) - (2,3,1,4) + (2,4,3,1)"


def test_dims_json(capsys):
    code, out, _ = run(capsys, "dims", "--max-n", "3", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert rows[-1] == {"n": 3, "ST": 13, "Irr": 8, "Indec": 9, "D": 4, "C": 6, "B": 2,
                        "primRank": 8}


def test_basis_text(capsys):
    code, out, _ = run(capsys, "basis", "--max-n", "3")
    assert code == 0 and "B_3 (2): (1,2,1) (2,3,1)" in out


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "--suite", "tridendriform", "--max-total", "6")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "check", "--suite", "freeness", "--max-n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["pass"] is True


@pytest.mark.parametrize("argv", [
    ["op", "--kind", "middle", "1,3", "1"],
    ["op", "--kind", "middle", "1"],
    ["op", "--q", "x", "1", "1"],
    ["eta", "1,2"],
    ["check"],
    ["check", "--suite", "dendriform", "--max-total", "99"],
    ["dims", "--max-n", "9"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_q():
    assert parse_q(None) is None and parse_q("q") is None
    assert parse_q("3") == 3 and parse_q("-1/2") == pytest.approx(-0.5)


def test_output_is_byte_stable():
    cmd = [sys.executable, "-m", "packedwords", "dims", "--max-n", "4", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)[-1]["primRank"] == 48


def test_failed_check_exits_with_one(capsys, monkeypatch):
    broken = perturbed_family("merged", (1, 1), drop=[(1, 1)])
    real = suites.axiom_suite
    monkeypatch.setattr(suites, "axiom_suite", lambda name, bound=None: real(name, bound, broken))
    code, out, _ = run(capsys, "check", "--suite", "tridendriform", "--max-total", "4")
    assert code == 1 and "FAIL" in out and "fails at degree" in out
