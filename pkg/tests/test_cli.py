import json

import golden_data
from qloop.cli import main
from qloop.ymono import poly_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fundamental_json(capsys):
    code, out, _ = run(capsys, "qchar", "fundamental", "--type", "A3",
                       "--node", "1", "--shift", "0", "--format", "json")
    assert code == 0
    poly = poly_from_json(json.loads(out))
    assert poly == golden_data.a3_fundamental_node1_expected()


def test_fundamental_text_and_latex(capsys):
    code, out, _ = run(capsys, "qchar", "fundamental", "--type", "A1",
                       "--node", "1", "--shift", "0")
    assert code == 0 and "Y[1,0]" in out
    code, out, _ = run(capsys, "qchar", "fundamental", "--type", "A1",
                       "--node", "1", "--shift", "0", "--format", "latex")
    assert code == 0 and "Y_{1,q^{0}}" in out


def test_unknown_type_is_invalid_input(capsys):
    code, _, err = run(capsys, "qchar", "fundamental", "--type", "Q5",
                       "--node", "1", "--shift", "0")
    assert code == 2
    assert "error" in err


def test_sl2_commands(capsys):
    code, out, _ = run(capsys, "sl2", "kr", "--k", "2", "--s", "0",
                       "--format", "json")
    assert code == 0 and len(json.loads(out)["terms"]) == 3
    code, out, _ = run(capsys, "sl2", "factor", "--monomial",
                       "[[1,0,1],[1,4,1]]", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"origin": 0, "length": 1},
                               {"origin": 4, "length": 1}]
    code, out, _ = run(capsys, "sl2", "ybe", "--u", "3", "--v", "5",
                       "--q", "2")
    assert code == 0 and out.strip() == "pass"
    code, _, err = run(capsys, "sl2", "ybe", "--u", "4", "--v", "5",
                       "--q", "2")
    assert code == 2 and "pole" in err


def test_rep_commands(capsys):
    code, out, _ = run(capsys, "rep", "roots", "--type", "A2",
                       "--format", "json")
    assert code == 0 and json.loads(out) == [[0, 1], [1, 0], [1, 1]]
    code, out, _ = run(capsys, "rep", "euler", "--type", "D4",
                       "--beta", "1,1,2,1", "--nu", "0,0,1,0",
                       "--format", "json")
    assert code == 0 and json.loads(out) == {"euler": 2}
    code, _, err = run(capsys, "rep", "euler", "--type", "A2",
                       "--beta", "1,1", "--nu", "0,1,0")
    assert code == 2


def test_qchar_standard(capsys):
    code, out, _ = run(capsys, "qchar", "standard", "--type", "A1",
                       "--w", "[[1,0,1],[1,2,1]]", "--format", "json")
    assert code == 0 and len(json.loads(out)["terms"]) == 4


def test_cluster_commands(capsys):
    code, out, _ = run(capsys, "cluster", "enumerate", "--type", "A3",
                       "--level", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"clusters": 14, "variables": 9, "frozen": 3}
    assert len(data["clusters"]) == 14
    assert all(len(cl) == 3 for cl in data["clusters"])
    some_var = data["variables"]["v000"]
    assert set(some_var) == {"denominator", "F", "g"}
    code, out, _ = run(capsys, "cluster", "fpoly", "--type", "A2",
                       "--level", "1", "--beta", "1,1", "--format", "json")
    assert code == 0
    fdata = json.loads(out)
    assert fdata["beta"] == [1, 1]
    assert {"v": [], "c": 1} in fdata["F"]["terms"]
    code, out, _ = run(capsys, "cluster", "classify", "--type", "A2",
                       "--level", "2")
    assert code == 0 and out.strip() == "D4"


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "l1", "--type", "A2",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert all(entry["pass"] for entry in report)
    assert all({"case", "pass", "lhs", "rhs"} <= set(entry)
               for entry in report)
    code, out, _ = run(capsys, "verify", "tsystem", "--type", "A2",
                       "--node", "1", "--k", "2", "--s", "0")
    assert code == 0 and out.strip() == "pass"
    code, out, _ = run(capsys, "verify", "iota", "--type", "A1",
                       "--level", "2")
    assert code == 0


def test_cap_exceeded_is_reported(capsys):
    code, _, err = run(capsys, "cluster", "enumerate", "--type", "A3",
                       "--level", "1", "--cap", "3")
    assert code == 1 and "cap" in err


def test_console_script_runs_in_a_subprocess():
    import shutil
    import subprocess
    exe = shutil.which("qloop")
    if exe is None:
        import pytest
        pytest.skip("console script not installed")
    out = subprocess.run([exe, "verify", "l1", "--type", "A2"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "FAIL" not in out.stdout


def test_json_output_is_deterministic(capsys):
    outputs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "cluster", "enumerate", "--type", "A2",
                           "--level", "1", "--format", "json")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
