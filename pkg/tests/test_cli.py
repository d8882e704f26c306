import json
import subprocess
import sys
from fractions import Fraction

import pytest

from ordbell.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from ordbell.core import LAMBDA, UsageError, XPoly
from ordbell.families import FamilyId, Kind, degenerate_ordered_bell_poly, ordered_bell_poly
from ordbell.jsonio import (
    poly_from_json,
    poly_to_json,
    representation_from_json,
    representation_to_json,
    scalar_from_json,
    scalar_to_json,
)
from ordbell.represent import represent

F = Fraction


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "ordbell", *args], input=stdin, capture_output=True, text=True, timeout=300
    )


# --- JSON ------------------------------------------------------------------------------


def test_scalar_round_trip():
    for c in (F(0), F(-7, 3), 3 - LAMBDA, LAMBDA**2 / 5):
        assert scalar_from_json(json.loads(json.dumps(scalar_to_json(c)))) == c
    with pytest.raises(UsageError):
        scalar_from_json("1/0")
    with pytest.raises(UsageError):
        scalar_from_json({"oops": []})


def test_poly_round_trip():
    for p, lam in [
        (ordered_bell_poly(5), None),
        (XPoly(), None),
        (degenerate_ordered_bell_poly(4, 2), LAMBDA),
        (degenerate_ordered_bell_poly(3, 1, F(1, 3)), F(1, 3)),
    ]:
        obj = json.loads(json.dumps(poly_to_json(p, lam)))
        q, lam2 = poly_from_json(obj)
        assert q == p and lam2 == lam
    assert poly_to_json(XPoly())["coeffs"] == ["0"]


def test_representation_round_trip():
    p = XPoly([1, F(-2, 3), 0, 5])
    for basis in (FamilyId(Kind.BERNOULLI), FamilyId(Kind.ORDERED_BELL, 3), FamilyId(Kind.DEGENERATE_ORDERED_BELL, 2, LAMBDA)):
        rep = represent(p, basis)
        back = representation_from_json(json.loads(json.dumps(representation_to_json(rep))))
        assert back == rep and back.reconstruct() == p


def test_bad_poly_json():
    for obj in ([], {"coeffs": "1,2"}, {"var": "y", "coeffs": []}, {"coeffs": [True]}):
        with pytest.raises(UsageError):
            poly_from_json(obj)


# --- in-process ---------------------------------------------------------------------


def test_main_exit_codes(capsys):
    assert main(["family", "--kind", "ordered-bell", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "13 + 9*x + 3*x^2 + x^3"
    assert main(["family", "--kind", "nope", "--n", "3"]) == EXIT_USAGE
    assert main(["numbers", "--kind", "bernoulli", "--count", "3", "--lambda", "1/2"]) == EXIT_USAGE
    assert main(["--max-degree", "4", "family", "--kind", "bernoulli", "--n", "9"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "ordbell: error:" in err


def test_verify_failure_exit_code(monkeypatch, capsys):
    from ordbell import cli
    from ordbell.identities import IdentityId, IdentityReport

    fake = [IdentityReport(IdentityId.EQ1E, {"n": 2}, "mismatch", "n/a", XPoly([1]), failed_checks=["x"])]
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: fake)
    assert main(["verify", "--filter", "EQ1E"]) == EXIT_MISMATCH
    assert capsys.readouterr().out.rstrip().endswith("FAIL")


# --- subprocess -----------------------------------------------------------------------


def test_family_text_and_json():
    r = run("family", "--kind", "degenerate-ordered-bell", "--n", "2")
    assert r.returncode == 0 and r.stdout.strip() == "(3 - λ) + (2 - λ)*x + x^2"
    r = run("--format", "json", "family", "--kind", "ordered-bell", "--n", "2", "--r", "2")
    p, lam = poly_from_json(json.loads(r.stdout))
    assert p == ordered_bell_poly(2, 2) and lam is None
    # global flags are accepted after the subcommand too
    r2 = run("family", "--kind", "ordered-bell", "--n", "2", "--r", "2", "--format", "json")
    assert r2.stdout == r.stdout


def test_represent_inputs(tmp_path):
    r = run("represent", "--coeffs", "0,0,1", "--basis", "ordered-bell")
    assert r.returncode == 0
    assert r.stdout.splitlines()[1:] == ["a_0 = -1", "a_1 = -2", "a_2 = 1"]
    src = tmp_path / "p.json"
    src.write_text(json.dumps(poly_to_json(XPoly([F(1, 2), 0, 0, 1]))))
    r = run("--format", "json", "represent", "--input", str(src), "--basis", "degenerate-ordered-bell", "--r", "2")
    rep = representation_from_json(json.loads(r.stdout))
    assert rep.basis == FamilyId(Kind.DEGENERATE_ORDERED_BELL, 2, LAMBDA)
    assert rep.reconstruct() == XPoly([F(1, 2), 0, 0, 1])
    r = run("represent", "--input", "-", "--basis", "bernoulli", stdin=src.read_text())
    assert r.returncode == 0 and r.stdout.splitlines()[1:] == ["a_0 = 3/4", "a_1 = 1", "a_2 = 3/2", "a_3 = 1"]


def test_usage_errors():
    assert run("represent", "--basis", "bernoulli").returncode == 2
    assert run("represent", "--coeffs", "1,x", "--basis", "bernoulli").returncode == 2
    assert run("represent", "--input", "/nonexistent.json", "--basis", "bernoulli").returncode == 2
    assert run("verify", "--filter", "NONEXISTENT").returncode == 2
    assert run("numbers", "--kind", "stirling2").returncode == 2
    assert run("family", "--kind", "degenerate-ordered-bell", "--n", "2", "--lambda", "0").returncode == 2
    assert run().returncode == 2


def test_numbers():
    r = run("numbers", "--kind", "ordered-bell", "--count", "6")
    assert r.stdout.split("\n")[:6] == ["0 1", "1 1", "2 3", "3 13", "4 75", "5 541"]
    r = run("numbers", "--kind", "stirling2", "--n", "4")
    assert r.stdout.splitlines() == ["0 0", "1 1", "2 7", "3 6", "4 1"]
    r = run("--format", "json", "numbers", "--kind", "harmonic", "--count", "3")
    assert json.loads(r.stdout)["values"][-1] == {"n": 3, "value": "11/6"}


def test_verify_deterministic(tmp_path):
    args = ("verify", "--filter", "EQ2A,S6B", "--max-n", "4", "--r-max", "1", "--lambda", "sym")
    a, b = run(*args), run(*args)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout.rstrip().endswith("PASS")
    j1 = run("--format", "json", *args, "--report", str(tmp_path / "r.json"))
    j2 = run(*args, "--format", "json")
    assert j1.stdout == j2.stdout
    full = json.loads((tmp_path / "r.json").read_text())
    assert all("elapsed_ms" in rep for rep in full)
    assert all("elapsed_ms" not in rep for rep in json.loads(j1.stdout))
