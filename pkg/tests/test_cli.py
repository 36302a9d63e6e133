import json
from fractions import Fraction

import pytest

from twistedhopf import perm, verify
from twistedhopf.cli import main
from twistedhopf.operads import AssociativeOperad, get_operad


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coproduct_unit(capsys):
    code, out, _ = run(capsys, "coproduct", "as", "[1]")
    assert code == 0
    assert out.strip() == "(1_1|1_0|[]) + (1_0|1_1|[])"


def test_coproduct_reduced_bracket_is_zero(capsys):
    code, out, _ = run(capsys, "coproduct", "pois", "{[1,2]}", "--reduced")
    assert code == 0 and out.strip() == "0"


def test_coproduct_reduced_product(capsys):
    code, out, _ = run(capsys, "coproduct", "pois", "{1}{2}", "--reduced")
    assert code == 0 and out.strip() != "0"


def test_primitives(capsys):
    code, out, _ = run(capsys, "primitives", "as", "2")
    assert code == 0 and out.strip() == "[1,2] - [2,1]"
    code, out, _ = run(capsys, "primitives", "as", "4", "--dims-only")
    assert code == 0 and out.strip() == "1,1,2,6"


def test_primitives_pois_prints_pbw_identity(capsys):
    code, out, _ = run(capsys, "primitives", "pois", "3", "--dims-only")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "1,1,2"
    assert lines[-1] == "# n=3: sum over set partitions of prod (|B|-1)! = 6 = 3!"


def test_axioms_json(capsys):
    code, out, _ = run(capsys, "axioms", "com", "--max-n", "3", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["status"] == "pass"
    assert {r["law"] for r in payload["laws"]} >= {"assoc1", "equivariance", "lemma_restriction"}


def test_axioms_text(capsys):
    code, out, _ = run(capsys, "axioms", "lie", "--max-n", "3")
    assert code == 0
    assert "deg1" not in out and "equivariance: pass" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["axioms", "nosuch"],
        ["coproduct", "as", "[1,1]"],
        ["coproduct", "pois", "{[1,2"],
        ["primitives", "as", "0"],
        ["verify", "--profile", "huge"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


class FlippedAs(AssociativeOperad):
    def compose(self, a, i, b):
        return {perm.invert(perm.partial_compose(perm.invert(a), i, perm.invert(b))): Fraction(1)}


def test_tampered_verify_fails_with_counterexample(capsys, monkeypatch):
    flipped = FlippedAs()
    monkeypatch.setattr(verify, "get_operad", lambda name: flipped if name == "as" else get_operad(name))
    code, out, _ = run(capsys, "verify", "--profile", "quick", "--json")
    report = json.loads(out)
    assert code == 1 and report["status"] == "fail"
    bad = [r for r in report["records"] if r["status"] == "fail"]
    assert any(r["law"] == "equivariance" and r["operad"] == "as" for r in bad)
    assert all(r["counterexamples"] for r in bad)
    assert report["records"][0]["name"] == "convention" and report["records"][0]["status"] == "fail"
    ce = bad[0]["counterexamples"][0]
    assert ce["lhs"] != ce["rhs"]
