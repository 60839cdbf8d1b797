import io
import json
import shutil
import subprocess
import sys

import pytest

from holotriples.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_classify_gamma(capsys):
    assert call_json(capsys, "classify", "--matrix", "[[0,-1],[1,0]]", "--f0", "-0.5") == {
        "tag": "Gamma", "delta": "-4/1", "trace": "0/1", "det": "1/1", "detMplusI": "2/1"}


def test_classify_bad_det(capsys):
    code, _, err = call(capsys, "classify", "--matrix", "[[1,0],[0,-1]]", "--f0", "-0.5")
    assert code == 1
    assert "det(M) ≤ 0" in err


def test_charge_eval_mu(capsys):
    assert call_json(capsys, "charge-eval", "--mu", "--class", "[0,1]")["charge"] == "-1+0i"
    code, out, _ = call(capsys, "charge-eval", "--mu", "--class", "[0,1]")
    assert code == 0 and "-1+0i" in out


def test_charge_eval_alpha_and_gamma(capsys):
    assert call_json(capsys, "charge-eval", "--alpha", "2", "--class", "[1,0,0,0]")["charge"] == "-2+1i"
    out = call_json(capsys, "charge-eval", "--regime", "Gamma", "--matrix", "[[0,-1],[1,0]]",
                    "--class", "[0,0,0,1]")
    assert out["charge"] == "-1+0i"


def test_malformed_inputs(capsys):
    assert call(capsys, "classify", "--matrix", "[[1,0]]", "--f0", "0")[0] == 2
    assert call(capsys, "classify", "--matrix", "not json", "--f0", "0")[0] == 2
    assert call(capsys, "classify", "--f0", "0")[0] == 2
    assert call(capsys, "charge-eval", "--mu", "--class", "[1,2,3]")[0] == 2
    assert call(capsys, "classify", "--bogus")[0] == 2
    assert call(capsys, "nope")[0] == 2


def test_glue_check(capsys):
    out = call_json(capsys, "glue-check", "--sod", "31", "--r1", "1.2", "--r2", "0.1")
    assert out["gluing_holds"] is True
    out = call_json(capsys, "glue-check", "--r1", "-0.3", "--r2", "0")
    assert out["jealousy"] == "no_stability_function"


def test_support_check(capsys):
    out = call_json(capsys, "support-check", "--regime", "GammaEuler", "--matrix", "[[0,-1],[1,0]]")
    assert out["certified"] is True
    out = call_json(capsys, "support-check", "--regime", "StrongOrth", "--samples", "20", "--seed", "3")
    assert out["counterexamples"] == 0 and out["certified"] == 20
    assert call(capsys, "support-check", "--regime", "Bogus")[0] == 2
    assert call(capsys, "support-check", "--regime", "GammaEuler", "--matrix", "[[0,-1],[1,0]]",
                "--genus", "2")[0] == 1


def test_bounds(capsys):
    out = call_json(capsys, "bounds", "--alpha", "1", "--class", "[1,0,2,1]")
    assert out["trialpha"] == ["1/2", "2/1"]
    assert out["interval"] == ["1/2", "2/1"] and out["inside"] is True
    assert call(capsys, "bounds", "--alpha", "1", "--class", "[1,0,1,1]")[0] == 1


def test_serre_and_dual(capsys):
    out = call_json(capsys, "serre", "--class", "[1,0,0,0]")
    assert out["image"] == [0, 0, 1, 0] and out["cube_is_identity"] is True
    assert call_json(capsys, "dual", "--class", "[1,2,1,3]")["dual"] == [1, -3, 1, -2]
    assert call(capsys, "serre", "--class", "[1,0,0,0]", "--genus", "2")[0] == 1


def test_hn_triangle(capsys):
    out = call_json(capsys, "hn-triangle", "--alpha", "0", "--class", "[0,1]")
    assert out["status"] == "semistable"
    assert [f["class"] for f in out["factors"]] == [[0, 1, 0, 1], [0, 0, 0, -1]]


def test_audit_from_stdin(capsys, monkeypatch):
    doc = {"phases": [1.6, 0.9, 1, 0.5, 1.5, 0.7], "stable": {"i_x": False}}
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(doc)))
    out = call_json(capsys, "audit", "--input", "-")
    assert out["count"] == 1 and out["violations"][0]["rule"] == "phi4 > phi2+1"


def test_audit_rejects_bad_profile(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"stable": {"zz": true}}'))
    assert call(capsys, "audit", "--input", "-")[0] == 2


def test_region(capsys):
    out = call_json(capsys, "region", "--rho", "[1,1,1.25,0.75]")
    assert abs(float(out["delta"]) - 2.41421356237) < 1e-8
    out = call_json(capsys, "region", "--matrix", "[[1,0],[0,1]]", "--f0", "0")
    assert out["in_L12"] is True and out["in_Y"] is True


def test_trace_json_lines(capsys):
    code, out, _ = call(capsys, "trace", "--matrix", "[[1,0],[0,2]]", "--end", "[[0,-1],[1,0]]",
                        "--f0", "-0.5")
    assert code == 0
    events = [json.loads(line) for line in out.splitlines()]
    assert [(e["wall"], e["left"], e["right"]) for e in events] == [("delta=0", "Theta1", "Gamma")]


def test_oracle_commands(capsys):
    out = call_json(capsys, "oracle-hn", "--rep", '{"p":2,"dims":[1,1],"matrix":[[0]]}',
                    "--charge", "[-1,0,0,1]")
    assert [f["dims"] for f in out["factors"]] == [[1, 0], [0, 1]]
    assert out["unique"] is True and out["seesaw_violations"] == 0
    out = call_json(capsys, "oracle-torsion", "--dims", "[2,2]", "--charge", "[-1,0,0,1]", "--alpha", "0")
    assert out["ok"] is True
    out = call_json(capsys, "oracle-torsion", "--dims", "[1,1]", "--charge", "[-1,0,0,1]", "--alpha", "inf")
    # only the zero rep is torsion
    assert out["torsion"] == 1
    assert call(capsys, "oracle-hn", "--rep", '{"dims":[4,3]}', "--charge", "[-1,0,0,1]")[0] == 1


def test_text_mode_is_aligned_report(capsys):
    code, out, _ = call(capsys, "classify", "--matrix", "[[1,0],[0,2]]", "--f0", "-0.5")
    assert code == 0
    assert "Theta1" in out and not out.lstrip().startswith("{")


def test_deterministic_output(capsys):
    argv = ("bounds", "--alpha", "3/2", "--class", "[1,-2,4,5]", "--json")
    first = call(capsys, *argv)[1]
    assert first == call(capsys, *argv)[1]


@pytest.mark.skipif(shutil.which("holotriples") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["holotriples", "serre", "--class", "[0,0,1,0]", "--json"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["image"] == [-1, 0, -1, 0]
