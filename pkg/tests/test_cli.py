"""CLI behaviour and golden outputs for the worked examples.

Set BORELGENS_REGEN_GOLDEN=1 to rewrite the files under tests/golden; review the diff by hand.
"""

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from borelgens.cli import main

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("BORELGENS_REGEN_GOLDEN") == "1"

CASES = {
    "ass_ade_c4": ["ass", "borel{a*d*e,c^4}@5", "--method", "both", "--trace"],
    "trunc_ade_c4_2": ["trunc", "borel{a*d*e,c^4}@5", "2"],
    "dual_ade_bcf": ["dual", "sfborel{a*d*e,b*c*f}"],
    "dual_ade": ["dual", "sfborel{a*d*e}@6"],
    "stanley_abcde": ["stanley", "borel{a*b*c*d*e}@5"],
    "hilbert_abcde": ["hilbert", "borel{a*b*c*d*e}@5", "--values", "8"],
    "hilbert_abcde_hpoly": ["hilbert", "borel{a*b*c*d*e}@5", "--h-poly"],
    "mult_abcde": ["mult", "borel{a*b*c*d*e}@5"],
    "depth_ade_c4": ["depth", "borel{a*d*e,c^4}@5"],
    "catalan_abcde": ["catalan", "a*b*c*d*e"],
    "catalan_x5_cubed": ["catalan", "x5^3"],
    "betti_a_b2": ["betti", "borel{a,b^2}@3", "--quotient", "--method", "both"],
    "betti_c3": ["betti", "borel{c^3}@3", "--quotient", "--method", "both"],
    "betti_ac2_b2c": ["betti", "borel{a*c^2,b^2*c}@3", "--quotient", "--method", "both"],
    "betti_a_b2_c3": ["betti", "borel{a,b^2,c^3}@3", "--quotient", "--method", "both"],
    "betti_a_b2_c3_ideal": ["betti", "borel{a,b^2,c^3}@3"],
    "poincare_b2": ["poincare", "borel{b^2}@2"],
    "poincare_k_b2": ["poincare", "borel{b^2}@2", "--series", "k", "--expand", "5"],
    "poincare_ext_ade": ["poincare", "sfborel{a*d*e}@5", "--series", "ext"],
    "ppt_4": ["ppt", "4"],
    "gens_b2": ["gens", "borel{b^2}@2"],
}

JSON_CASES = ["ass_ade_c4", "dual_ade_bcf", "hilbert_abcde", "betti_a_b2_c3", "catalan_abcde", "poincare_k_b2", "ppt_4"]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def check_golden(path, actual):
    if REGEN:
        path.write_text(actual)
    assert path.exists(), f"missing golden file {path.name}"
    return path.read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_plain_golden(name):
    code, out, _ = run(CASES[name])
    assert code == 0
    assert out == check_golden(GOLDEN / f"{name}.txt", out)


@pytest.mark.parametrize("name", JSON_CASES)
def test_json_golden(name):
    code, out, _ = run(CASES[name] + ["--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "borelgens/1" and doc["command"] == CASES[name][0]
    expected = json.loads(check_golden(GOLDEN / f"{name}.json", json.dumps(doc, indent=2, sort_keys=True) + "\n"))
    assert doc == expected


def test_spec_examples():
    assert run(["ass", "borel{a*d*e,c^4}@5", "--method", "both"])[:2] == (0, "P3 P4 P5\n")
    code, out, _ = run(["hilbert", "borel{a*b*c*d*e}@5", "--h-poly"])
    assert out == "1+t+t^2+t^3+t^4-41t^5+79t^6-56t^7+14t^8 / (1-t)^4\n"
    code, out, _ = run(["betti", "borel{a,b^2,c^3}@3", "--quotient"])
    lines = out.splitlines()
    assert len(lines) == 5 and lines[1].split() == ["total:", "1", "4", "5", "2"]


def test_exit_codes():
    code, _, err = run(["member", "borel{x1*x2^2}", "x3"])
    assert code == 3 and "x3" in err
    code, _, err = run(["gens", "borel{a*b,c*"])
    assert code == 2 and err.rstrip().endswith("^")
    assert run(["dual", "borel{a*b}@3"])[0] == 3
    assert run(["gens", "sfborel{a^2}"])[0] == 3
    assert run(["stanley", "a*b"])[0] == 3
    assert run(["poincare", "borel{a,b^2}@2", "--series", "k"])[0] == 3
    assert run(["poincare", "borel{a*b}@2", "--series", "ext"])[0] == 3


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["ass", "borel{a}", "--method", "fast"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_method_both_divergence_is_internal_error(monkeypatch):
    import borelgens.cli as cli

    monkeypatch.setattr(cli, "ass_trunc", lambda B: [1])
    code, _, err = run(["ass", "borel{a*d*e,c^4}@5", "--method", "both"])
    assert code == 1 and "socle" in err


def test_verify_reports_timings():
    for argv in (
        ["ass", "borel{a*d*e,c^4}@5"],
        ["gens", "borel{c^3}@3"],
        ["member", "borel{b^2}@2", "a*b"],
        ["trunc", "borel{a*d*e,c^4}@5", "3"],
        ["dual", "sfborel{a*d*e,b*c*f}"],
        ["stanley", "borel{b*c^2}@4"],
        ["hilbert", "borel{a*b*c*d*e}@5"],
        ["mult", "borel{a*d*e,c^4}@5"],
        ["depth", "borel{b^2,a*c}@4"],
        ["catalan", "a*c^2"],
        ["betti", "borel{a,b^2,c^3}@3"],
    ):
        code, _, err = run(argv + ["--verify"])
        assert code == 0, argv
        assert err.startswith("verify: ok (fast "), (argv, err)
    code, _, err = run(["ppt", "3", "--verify"])
    assert code == 0 and "skipped" in err


def test_verify_mismatch_is_internal_error(monkeypatch):
    import borelgens.cli as cli

    monkeypatch.setattr(cli, "membership", lambda B, mu: False)
    code, _, err = run(["member", "borel{b^2}@2", "a*b", "--verify"])
    assert code == 1 and "mismatch" in err


def test_verify_json_block():
    code, out, _ = run(["gens", "borel{b^2}@2", "--verify", "--json"])
    doc = json.loads(out)
    assert doc["verify"]["status"] == "ok"
    assert set(doc["verify"]) == {"status", "fast_seconds", "oracle_seconds"}


def test_nvars_flag():
    assert run(["bgens", "borel{a*b}", "--nvars", "4"])[1] == "borel{a*b}@4\n"
    assert run(["member", "borel{b^2}", "a*b", "--nvars", "3"])[1] == "true\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "borelgens", "ass", "borel{a*d*e,c^4}@5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "P3 P4 P5\n"
    proc = subprocess.run([sys.executable, "-m", "borelgens", "bgens", "borel{a"], capture_output=True, text=True)
    assert proc.returncode == 2
