import json

import pytest

from jenningslab.cli import main
from jenningslab.series import parse_series
from jenningslab.witness import evaluate, word_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_series_commands(capsys):
    assert run(capsys, "compose", "x + x^2", "x + x^3", "--trunc", "5")[:2] == (0, "x + x^2 + x^3 + 2*x^4 (mod x^5)")
    assert run(capsys, "commutator", "x + x^3", "x + x^2", "--trunc", "6")[:2] == (0, "x + x^4 - x^5 (mod x^6)")
    assert run(capsys, "inverse", "x", "--trunc", "9")[:2] == (0, "x (mod x^9)")
    code, out, _ = run(capsys, "inverse", "x + x^2 (mod x^4)", "--json")
    assert code == 0 and json.loads(out) == {"trunc": 4, "coeffs": {"2": "-1", "3": "2"}}


def test_series_errors(capsys):
    code, _, err = run(capsys, "compose", "x + x^2 (mod x^5)", "x + x^3 (mod x^6)")
    assert code == 2 and "5 vs 6" in err
    code, _, err = run(capsys, "compose", "x + 1", "x", "--trunc", "4")
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--k", "2", "--l", "8", "--alpha", "1", "--check")
    assert code == 0 and out.splitlines()[-1] == "valid, leading 1*x^8"
    code, out, _ = run(capsys, "witness", "--k", "3", "--l", "10", "--alpha", "-2", "--check", "--json")
    data = json.loads(out)
    assert code == 0 and data["check"]["valid"] and data["check"]["leading"] == "-2*x^10"
    w = word_from_json(data["word"])
    assert evaluate(w, 11)[10] == -2
    code, _, err = run(capsys, "witness", "--k", "5", "--l", "15")
    assert code == 2 and "c_5 = 16" in err


def test_abelianize(capsys):
    code, out, _ = run(capsys, "abelianize", "--k", "2")
    assert code == 0 and out.splitlines()[0] == "Z^2 + (Z/2)^2 [matches theorem]"
    code, out, _ = run(capsys, "abelianize", "--k", "8")
    assert out.splitlines()[0] == "Z^8 + Z/4 + (Z/2)^3 [matches theorem]"
    assert run(capsys, "abelianize", "--k", "1")[0] == 2
    code, out, _ = run(capsys, "abelianize", "--k", "3", "--json")
    assert json.loads(out)["invariant_factors"] == [2, 2]


def test_max_k(capsys, monkeypatch):
    monkeypatch.setenv("JENNINGSLAB_MAX_K", "4")
    assert run(capsys, "abelianize", "--k", "5")[0] == 2
    monkeypatch.setenv("JENNINGSLAB_MAX_K", "many")
    assert run(capsys, "abelianize", "--k", "2")[0] == 2


@pytest.mark.parametrize("suite", ["core", "phi", "psi", "abelianization", "gamma"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--trials", "40", "--json")
    (rep,) = json.loads(out)
    assert code == 0 and rep["failures"] == []
    if suite == "gamma":
        assert len(rep["notes"]["discrepancies"]) == 4


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "abelianization")
    assert code == 0 and "0 failures" in out
