import json
import os
import subprocess
import sys

import jsonschema
import pytest

import schemas
from quotp1 import cli

EX_ANN = {"d": 2, "r": 2, "chart": [1, 1], "params": {"w_1_1": "0", "w_1_2": "0", "w_2_1": "0", "w_2_2": "0"}}
SPLIT = {"d": 2, "r": 2, "chart": [2], "params": {"w_1_1": "-2", "w_2_1": "3", "w_1_2": "1", "w_2_2": "0"}}
ROOT2 = {"d": 2, "r": 2, "chart": [2], "params": {"w_1_1": "2", "w_2_1": "0", "w_1_2": "0", "w_2_2": "0"}}
NIL3 = {"d": 3, "r": 2, "chart": [3], "params": {f"w_{h}_{m}": "0" for h in (1, 2, 3) for m in (1, 2)}}
ANN_MATRIX = {"d": 2, "r": 2, "rows": 2, "cols": 6,
              "entries": [["1", "0", "0", "0", "0", "0"], ["0", "0", "0", "1", "0", "0"]]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, data in [("ann", EX_ANN), ("split", SPLIT), ("root2", ROOT2), ("nil3", NIL3), ("cm", ANN_MATRIX)]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(data))
        out[name] = str(p)
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"ring": {"vars": ["x", "y"], "field": "Q", "order": "grevlex"},
                                 "gens": ["y", "x^2 - x"]}))
    out["ideal"] = str(ideal)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    data = json.loads(out)
    jsonschema.validate(data, schema)
    return data


# -- documented examples ---------------------------------------------------------

def test_chart_ideal_examples(capsys):
    code, out, _ = run(capsys, "chart-ideal", "-d", "2", "-r", "2", "--chart", "1,1", "--format", "text")
    assert code == 0
    assert out.splitlines() == [
        "w_1_1^2 + w_1_2*w_2_1", "w_1_1*w_1_2 + w_1_2*w_2_2", "w_1_1*w_2_1 + w_2_1*w_2_2", "w_1_2*w_2_1 + w_2_2^2",
    ]
    code, out, _ = run(capsys, "chart-ideal", "-d", "3", "-r", "2", "--chart", "3", "--reduced")
    assert (code, out) == (0, "w_1_1\nw_2_1\nw_3_1\n")
    code, out, _ = run(capsys, "chart-ideal", "-d", "1", "-r", "2", "--chart", "1")
    assert (code, out) == (0, "w_1_1\n")


def test_hilb_support_examples(capsys, files):
    assert run(capsys, "hilb-support", "--point", files["ann"])[:2] == (0, "y^2\n")
    assert run(capsys, "hilb-support", "--point", files["split"])[:2] == (0, "y^2 - 3*x*y + 2*x^2\n")
    assert run(capsys, "hilb-support", "--point", files["nil3"])[:2] == (0, "y^3\n")


def test_verify_paper_passes(capsys):
    code, out, _ = run(capsys, "verify-paper", "--max-d", "3")
    assert code == 0
    assert out.splitlines()[-1].startswith("11/11 claims without failure")


def test_verify_paper_json_ids(capsys):
    data = run_json(capsys, schemas.REPORT, "verify-paper", "--max-d", "2")
    assert [c["id"] for c in data["claims"]] == [f"AC{i}" for i in range(1, 12)]
    assert data["failed"] == 0


def test_verify_paper_tampered(capsys, monkeypatch):
    from quotp1 import verify

    real = verify.chart_ideal

    def flipped(chart, *args, **kwargs):
        I = real(chart, *args, **kwargs)
        if chart.parts == (1, 1) and chart.d == 2:
            gens = list(I.gens)
            gens[0] = -gens[0] + 2 * gens[0].ring.var("w_1_1") ** 2
            return verify.Ideal(gens, I.ring)
        return I

    monkeypatch.setattr(verify, "chart_ideal", flipped)
    code, out, _ = run(capsys, "verify-paper", "--max-d", "2", "--format", "json")
    assert code == 1
    data = json.loads(out)
    status = {c["id"]: c["status"] for c in data["claims"]}
    assert status["AC1"] == "fail"


# -- every command, both formats ----------------------------------------------------

def test_reduced_eqs(capsys):
    data = run_json(capsys, schemas.REDUCED_EQS, "reduced-eqs", "-d", "2", "-r", "2", "--chart", "1,1")
    assert data["ideal"]["gens"] == ["w_1_1 + w_2_2", "w_1_2*w_2_1 - w_1_1*w_2_2"]


def test_char_poly(capsys, files):
    data = run_json(capsys, schemas.CHAR_POLY, "char-poly", "-d", "2", "-r", "2", "--chart", "2")
    assert data["coeffs"] == ["-w_1_1", "-w_2_1", "1"]
    data = run_json(capsys, schemas.CHAR_POLY, "char-poly", "--point", files["split"])
    assert data["coeffs"] == ["2", "-3", "1"]
    assert run(capsys, "char-poly", "--point", files["split"])[1] == "T^2 - 3*T + 2\n"


def test_xi_map(capsys):
    data = run_json(capsys, schemas.XI_MAP, "xi-map", "-d", "3", "-r", "2", "--chart", "3")
    assert data["coords"] == ["1", "-w_3_1", "-w_2_1", "-w_1_1"]


def test_detect_chart(capsys, files):
    data = run_json(capsys, schemas.POINT, "detect-chart", "--matrix", files["cm"])
    assert data["chart"] == [1, 1]
    assert set(data["params"].values()) == {"0"}
    assert run(capsys, "detect-chart", "--matrix", files["cm"])[1].startswith("chart [1,1]\n")


def test_pluecker(capsys, files):
    data = run_json(capsys, schemas.PLUECKER, "pluecker", "--point", files["split"])
    assert data["count"] == 15 == len(data["minors"])
    assert data["minors"][0] == {"columns": [1, 2], "value": "1"}
    data = run_json(capsys, schemas.PLUECKER, "pluecker", "--matrix", files["cm"])
    assert {tuple(m["columns"]): m["value"] for m in data["minors"] if m["value"] != "0"} == {(1, 4): "1"}


def test_fiber(capsys, files):
    data = run_json(capsys, schemas.FIBER, "fiber", "--point", files["split"])
    assert [c["form"] for c in data["components"]] == ["y - x", "y - 2*x"]
    data = run_json(capsys, schemas.FIBER, "fiber", "--point", files["ann"])
    assert data["profile"] == [{"root": "y", "algebraic": 2, "corank": 2, "flagged": False}]


def test_fiber_non_split(capsys, files):
    code, out, err = run(capsys, "fiber", "--point", files["root2"])
    assert code == 1 and out == ""
    assert err == "quot fiber: characteristic polynomial does not split: T^2 - 2\n"
    code, out, _ = run(capsys, "fiber", "--point", files["root2"], "--field", "fp:7")
    assert code == 0 and "y - 3*x" in out


def test_tangent(capsys, files):
    data = run_json(capsys, schemas.TANGENT, "tangent", "-d", "2", "-r", "2", "--chart", "1,1",
                    "--equations", "reduced")
    assert (data["jacobian_rank"], data["tangent_dim"], data["krull_dim"], data["verdict"]) == (1, 3, 2, "singular")
    data = run_json(capsys, schemas.TANGENT, "tangent", "-d", "2", "-r", "2", "--chart", "1,1", "--at", "w_1_2=1")
    assert data["verdict"] == "smooth"
    code, out, _ = run(capsys, "tangent", "--ideal", files["ideal"], "--at", "x=1,y=0")
    assert code == 0 and out.endswith("smooth\n")


def test_component(capsys, files):
    data = run_json(capsys, schemas.COMPONENT, "component", "-d", "2", "-r", "2", "--chart", "1,1")
    assert data["component"] == "embedded"
    assert run(capsys, "component", "--ideal", files["ideal"])[1] == "isolated\n"


def test_chart_ideal_json_and_fp(capsys):
    data = run_json(capsys, schemas.CHART_IDEAL, "chart-ideal", "-d", "2", "-r", "2", "--chart", "2",
                    "--field", "fp:32003", "--reduced", "--order", "lex")
    assert data["ideal"]["ring"] == {"vars": ["w_1_1", "w_1_2", "w_2_1", "w_2_2"], "field": "Fp:32003",
                                     "order": "lex"}
    assert data["ideal"]["gens"] == ["w_1_1", "w_2_1"]


# -- errors and determinism ----------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["chart-ideal", "-d", "2", "-r", "2", "--chart", "2,1"],
    ["chart-ideal", "-d", "2", "-r", "1", "--chart", "2"],
    ["chart-ideal", "-d", "2", "--chart", "2"],
    ["chart-ideal", "-d", "3", "-r", "2", "--chart", "2,1", "-t", "2"],
    ["chart-ideal", "-d", "2", "-r", "2", "--chart", "2", "--field", "fp:9"],
    ["hilb-support"],
    ["verify-paper", "--max-d", "1"],
    ["tangent", "-d", "2", "-r", "2", "--chart", "1,1", "--at", "w_1_1=1"],
    ["tangent", "-d", "2", "-r", "2", "--chart", "1,1", "--at", "q=1"],
    ["tangent", "-d", "2", "-r", "2", "--chart", "1,1", "--at", "w_1_1"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith(f"quot {argv[0]}: ")


def test_bad_files_exit_2(capsys, files, tmp_path):
    assert run(capsys, "hilb-support", "--point", files["bad"])[0] == 2
    assert run(capsys, "hilb-support", "--point", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "hilb-support", "--point", files["ideal"])[0] == 2
    assert run(capsys, "detect-chart", "--matrix", files["split"])[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["chart-ideal", "-d", "zero"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command"])
    assert info.value.code == 2
    capsys.readouterr()


def test_output_is_deterministic(files):
    argv = [
        ["chart-ideal", "-d", "3", "-r", "2", "--chart", "2,1", "--reduced", "--format", "json"],
        ["fiber", "--point", files["split"], "--format", "json"],
        ["pluecker", "--point", files["nil3"]],
        ["tangent", "-d", "3", "-r", "2", "--chart", "2,1", "--equations", "reduced"],
    ]
    env = dict(os.environ, PYTHONHASHSEED="random")
    for args in argv:
        outs = {subprocess.run([sys.executable, "-m", "quotp1", *args], env=env, capture_output=True,
                               check=True).stdout for _ in range(3)}
        assert len(outs) == 1


def test_console_script_and_module_entry(files):
    out = subprocess.run([sys.executable, "-m", "quotp1", "hilb-support", "--point", files["split"]],
                         capture_output=True, text=True)
    assert (out.returncode, out.stdout) == (0, "y^2 - 3*x*y + 2*x^2\n")
    out = subprocess.run([sys.executable, "-m", "quotp1", "fiber", "--point", files["root2"]],
                         capture_output=True, text=True)
    assert out.returncode == 1
