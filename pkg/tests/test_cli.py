import io
import json
import os
import subprocess
import sys

import pytest

from amalgam import groebner as gbmod
from amalgam.cli import main
from amalgam.errors import IllDefined, ParseError, UnresolvedName
from amalgam.problem import parse_problem_file

from conftest import PROBLEMS

E2 = os.path.join(PROBLEMS, "e2.amg")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


HEADER = "field GF(7)\nring x\nideal I = x^2\nideal J = x^3\n"


# -- problem files -------------------------------------------------------------


def test_parse_example2_file():
    with open(E2) as fh:
        pf = parse_problem_file(fh.read())
    assert str(pf.field) == "GF(7)"
    assert sorted(pf.algebras) == ["A0", "A1", "A2"] and sorted(pf.homs) == ["f1", "f2"]
    assert pf.task == "amalgam" and list(pf.task_args) == ["f1", "f2"]


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_problem_file("")
    assert (exc.value.line, exc.value.column) == (1, 1)
    with pytest.raises(ParseError) as exc:
        parse_problem_file("ring x\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError) as exc:
        parse_problem_file(HEADER + "ideal K = x^^2\n")
    assert exc.value.line == 5
    with pytest.raises(UnresolvedName):
        parse_problem_file(HEADER + "algebra A = ring / K\n")
    with pytest.raises(IllDefined) as exc:
        parse_problem_file(HEADER + "algebra A = ring / I\nalgebra B = ring / J\n"
                                    "hom f : A -> B { x -> x }\n")
    assert "x^2" in str(exc.value)


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\nfield GF(7)  # prime\nring x\n\nideal I = x^2 # square\n"
    assert [str(g) for g in parse_problem_file(text).ideals["I"].generators] == ["x^2"]


# -- commands ------------------------------------------------------------------


def test_compute_example2_text():
    code, out, _ = run("compute", E2)
    assert code == 0
    lines = out.splitlines()
    assert "ideal: x^3, x*y, y^2" in lines and "length: 4" in lines
    assert "M: 1, x, y, x^2" in lines and "rank L: 0" in lines
    assert all(l.endswith("pass") for l in lines if l.startswith("certificate"))


def test_compute_young_flag():
    code, out, _ = run("compute", E2, "--young")
    assert code == 0 and out.rstrip().endswith("staircase:\n#\n###")


def test_compute_json_schema():
    code, out, _ = run("compute", E2, "--format", "json")
    data = json.loads(out)
    assert code == 0
    for key in ("field", "ring", "amalgam_ideal", "length", "lengths", "certificates", "trace"):
        assert key in data
    assert data["amalgam_ideal"] == ["x^3", "x*y", "y^2"]
    assert data["trace"] == {"d_paper": 3, "d_used": 3, "M": ["1", "x", "y", "x^2"], "rank_L": 0}
    assert data["lengths"] == {"A1": 3, "A2": 3, "A0": 2}


def test_compute_without_certificates():
    code, out, _ = run("compute", E2, "--no-certificates")
    assert code == 0 and "length: 4" in out
    assert "certificate pullback_match" not in out


def test_compute_univariate_and_degree_repair():
    _, out, _ = run("compute", os.path.join(PROBLEMS, "e2_univariate.amg"))
    assert "ideal: x^3, x*y, y^2" in out and "length: 4" in out
    _, out, _ = run("compute", os.path.join(PROBLEMS, "degree_repair.amg"))
    assert "d: 4 (minimal-basis degree 3)" in out and "length: 8" in out


def test_groebner_command():
    code, out, _ = run("groebner", E2)
    assert code == 0
    assert "A0: x^2, y" in out.splitlines()
    assert "I2: x^3, y" in out.splitlines()


def test_young_command():
    code, out, _ = run("young", os.path.join(PROBLEMS, "young.amg"))
    assert code == 0
    assert "ideal: x^2, x*y, y^2" in out and "length: 3 = 2 + 2 - 1" in out
    code, _, err = run("young", E2)
    assert code == 1 and err.startswith("error: ")


def test_intersect_task(tmp_path):
    path = write(tmp_path, "i.amg", HEADER + "task intersect I J\n")
    code, out, _ = run("compute", path)
    assert code == 0 and out.splitlines() == ["ideal: x^3", "length: 3"]


def test_verify_problem_file():
    code, out, _ = run("verify", E2, "--trials", "3", "--seed", "7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "trials: 3"
    assert all(l.endswith(": 3/3") for l in lines[1:]) and len(lines) == 9


def test_verify_random():
    code, out, _ = run("verify", "--random", "--trials", "4", "--seed", "1", "--vars", "2",
                       "--max-length", "6")
    assert code == 0 and "pullback_match: 4/4" in out


def test_json_round_trip(tmp_path):
    _, out, _ = run("compute", E2, "--format", "json")
    path = write(tmp_path, "r.json", out)
    code, text, _ = run("verify", path)
    assert code == 0
    assert "pullback_match: pass" in text and "trace: match" in text
    data = json.loads(out)
    data["length"] = 5
    code, text, _ = run("verify", write(tmp_path, "bad.json", json.dumps(data)))
    assert code == 2 and "length: MISMATCH" in text


# -- exit codes ----------------------------------------------------------------


@pytest.mark.parametrize("argv,code,prefix", [
    (["compute", "missing.amg"], 1, "error: cannot open"),
    (["bogus"], 1, "error: argument command"),
    (["verify"], 1, "error: verify needs"),
    (["compute", E2, "--max-basis", "1"], 2, "error: basis size"),
    (["compute", E2, "--max-degree", "1"], 2, "error: "),
])
def test_exit_codes(argv, code, prefix):
    got, _, err = run(*argv)
    assert got == code and err.startswith(prefix) and err.count("\n") == 1


@pytest.mark.parametrize("body,fragment", [
    ("", "empty problem file"),
    (HEADER + "algebra A = ring / K\n", "undeclared ideal 'K'"),
    (HEADER + "algebra A = ring / I\nalgebra B = ring / J\nhom f : A -> B { x -> x }\n",
     "ill-defined"),
    ("field GF(7)\nring x y\nideal I = x^2\nalgebra A = ring / I\n", "infinitely many"),
    ("field GF(6)\n", "error: "),
])
def test_problem_file_errors_exit_1(tmp_path, body, fragment):
    code, out, err = run("compute", write(tmp_path, "p.amg", body))
    assert code == 1 and out == "" and fragment in err


def test_limits_restored_after_run():
    before = (gbmod.LIMITS.max_basis, gbmod.LIMITS.max_degree)
    run("compute", E2, "--max-degree", "1")
    assert (gbmod.LIMITS.max_basis, gbmod.LIMITS.max_degree) == before


def test_console_script_is_deterministic(tmp_path):
    outs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        p = subprocess.run([sys.executable, "-m", "amalgam.cli", "compute", E2, "--format", "json"],
                           capture_output=True, text=True, env=env, check=True)
        outs.append(p.stdout)
    assert outs[0] == outs[1]
