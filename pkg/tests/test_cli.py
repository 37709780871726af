import json
import pathlib
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from conftest import brute_classes
from weakclassical.cli import main, parse_spec
from weakclassical.theorems import parse_instance

GOLDEN = pathlib.Path(__file__).parent / "golden"
FIXTURES = {
    "classify_z4_zero.json": "ring=ZZ; mod=ab(4); sub=sub()",
    "classify_z8_four.json": "ring=ZZ; mod=ab(8); sub=sub(4)",
    "classify_z2_z3_zero.json": "ring=ZZ; mod=ab(2,3); sub=sub()",
}
TINY = "ringmax=4,modmax=8,arity=2"


def schema():
    return json.loads(resources.files("weakclassical").joinpath("schema/suite_report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- classify -----------------------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_classify_golden(capsys, name):
    code, out, _ = run(capsys, "classify", "--spec", FIXTURES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_golden_classes_agree_with_oracle(name):
    data = json.loads((GOLDEN / name).read_text())
    assert data["classes"] == brute_classes(parse_instance(FIXTURES[name]).submodule)


def test_classify_fixture_values():
    z4 = json.loads((GOLDEN / "classify_z4_zero.json").read_text())
    assert z4["classes"]["weakly_classical_prime"] and not z4["classes"]["classical_prime"]
    assert z4["witnesses"]["classical_prime"] == [2, 2, 1]
    assert z4["colon"] == {"generators": [4], "weakly_prime": False, "witness": [2, 2]}
    z8 = json.loads((GOLDEN / "classify_z8_four.json").read_text())
    assert not z8["classes"]["weakly_classical_prime"]
    assert z8["witnesses"]["weakly_classical_prime"] == [2, 2, 1]
    z23 = json.loads((GOLDEN / "classify_z2_z3_zero.json").read_text())
    assert z23["classes"]["weakly_classical_prime"] and not z23["classes"]["classical_prime"]


def test_classify_markdown(capsys):
    code, out, _ = run(capsys, "classify", "--spec", "mod=ab(4); sub=sub()", "--format", "md")
    assert code == 0 and "| classical_prime | False | [2, 2, 1] |" in out


def test_spec_from_file(tmp_path, capsys):
    f = tmp_path / "inst.txt"
    f.write_text("ring=Z12;\nmod=cyc(Z12;0);\nsub=sub(8)\n")
    assert parse_spec(str(f)).submodule.elements == (0, 4, 8)
    code, out, _ = run(capsys, "classify", "--spec", str(f))
    assert code == 0 and json.loads(out)["submodule"]["elements"] == [0, 4, 8]


def test_out_path(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "classify", "--spec", "mod=ab(4); sub=sub()", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text() == (GOLDEN / "classify_z4_zero.json").read_text()


# -- exit codes ------------------------------------------------------------------------------------


@pytest.mark.parametrize("argv, code", [
    (["classify", "--spec", "mod=ab(4); sub=sub(1)"], 2),
    (["classify", "--spec", "mod=free(Z2;0); sub=sub()"], 2),
    (["classify", "--spec", "ring=Z1"], 3),
    (["classify", "--spec", "mod=ab(4); sub=sub(9)"], 3),
    (["verify", "--theorem", "BOGUS"], 3),
    (["search", "--goal", "BOGUS"], 3),
    (["verify", "--workers", "0"], 3),
    (["verify", "--bounds", "ringmax=x"], 3),
    (["classify", "--spec", "mod=ab(4); sub=sub()", "--frobnicate"], 3),
    (["classify", "--spec", str(pathlib.Path("/nonexistent/dir/x"))], 3),
    ([], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_not_applicable_is_reported_as_json(capsys):
    code, out, _ = run(capsys, "classify", "--spec", "mod=ab(4); sub=sub(1)")
    assert code == 2 and json.loads(out)["error"] == "NotProper"


def test_usage_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "classify", "--spec", "ring=Z1")
    assert code == 3 and out == "" and "line 1, column 6" in err


# -- verify ------------------------------------------------------------------------------------


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "mod=cyc(Z4;0); sub=sub()", "--theorem", "T_T2,T_MAIN")
    data = json.loads(out)
    assert code == 0 and [o["status"] for o in data["outcomes"]] == ["Pass", "Pass"]


def test_verify_sweep_validates_against_schema(capsys):
    code, out, _ = run(capsys, "verify", "--bounds", TINY)
    assert code == 0
    jsonschema.validate(json.loads(out), schema())


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--bounds", TINY, "--theorem", "T_MAIN2", "--format", "md")
    assert code == 0 and "| T_MAIN2 | OBSERVE |" in out


def test_verify_mode_filter(capsys):
    _, out, _ = run(capsys, "verify", "--bounds", TINY, "--theorem", "T_FMULT", "--mode", "OBSERVE")
    assert [(t["id"], t["mode"]) for t in json.loads(out)["theorems"]] == [("T_FMULT", "OBSERVE")]


def test_verify_bytes_do_not_depend_on_workers(capsys):
    outs = [run(capsys, "verify", "--bounds", TINY, "--workers", w)[1] for w in ("1", "1", "2")]
    assert outs[0] == outs[1] == outs[2]


# -- search and enumerate -----------------------------------------------------------------------


def test_search_golden(capsys):
    code, out, _ = run(capsys, "search", "--goal", "WCP_NOT_CP")
    assert code == 0 and out == (GOLDEN / "search_wcp_not_cp.json").read_text()


def test_search_not_found(capsys):
    code, out, _ = run(capsys, "search", "--goal", "PROD3_CONVERSE", "--bounds", "ringmax=2,modmax=2,arity=2")
    assert code == 0 and json.loads(out)["status"] == "NotFound"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--spec", "mod=cyc(Z12;0)")
    data = json.loads(out)
    assert code == 0 and data["count"] == 6
    assert [s["size"] for s in data["submodules"]] == [1, 2, 3, 4, 6, 12]


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "weakclassical", "classify", "--spec", FIXTURES["classify_z8_four.json"]],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout == (GOLDEN / "classify_z8_four.json").read_text()
