import io
import json
import subprocess
import sys

import pytest

from braidcoh.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_all_defaults():
    code, out, _ = run("check", "--all")
    assert code == 0
    assert "36 pass + 1 expected-fail, 0 mismatched" in out


def test_check_expand22_dims():
    code, out, _ = run("check", "F17", "--atoms", "A=0,1", "B=0,1", "C=0,1", "D=0,1")
    assert code == 0 and "dim  16" in out


def test_vacuous_control_exit():
    code, out, _ = run("check", "NegMulSymmetry", "--expect", "fail", "--atoms", "A=0,0", "B=0")
    assert code == 1 and "vacuous control" in out


def test_check_json_schema():
    code, out, _ = run("check", "NegMulSymmetry", "AddSymmetry", "--json")
    rows = json.loads(out)
    assert code == 0
    assert rows[0]["witness"] == {"row": 3, "col": 3, "left": "q^2", "right": "1"}
    assert {"name", "figure", "verdict", "expected", "base_vertex"} <= set(rows[1])


def test_unknown_condition():
    code, _, err = run("check", "F99")
    assert code == 2 and "unknown condition" in err


def test_assignment_file(tmp_path):
    f = tmp_path / "asg.txt"
    f.write_text("A=1\nB=1\n")
    assert run("check", "NegMulSymmetry", "--assignment", str(f))[0] == 0
    f.write_text('{"A": [0], "B": [3]}')
    assert run("check", "NegMulSymmetry", "--assignment", str(f))[0] == 1
    assert run("check", "F4", "--assignment", str(tmp_path / "missing"))[0] == 2


def test_eval_outputs():
    code, out, _ = run("eval", "gT(A,B)", "--atoms", "A=1", "B=1")
    assert code == 0 and out.splitlines()[-1] == "[ q ]"
    code, out, _ = run("eval", "delta(A,B,C)", "--atoms", "A=0,0", "B=0", "C=0")
    assert out.splitlines()[1:] == ["[ 1  0  0  0 ]", "[ 0  0  1  0 ]", "[ 0  1  0  0 ]", "[ 0  0  0  1 ]"]
    code, out, _ = run("eval", "beta(A,B) ; inv(gT(B,A))", "--atoms", "A=1", "B=2", "--json")
    assert json.loads(out)["entries"] == [["q^2"]]


def test_eval_type_error_names_boundaries():
    code, _, err = run("eval", "eps(A) ; lP(B)", "--atoms", "A=1", "B=1")
    assert code == 2 and "0 does not match domain 0+B" in err


def test_eval_parse_error_position():
    code, _, err = run("eval", "gT(A,", "--atoms", "A=1")
    assert code == 2 and "line 1, column 6" in err


def test_eval_unassigned_atom():
    assert run("eval", "gT(A,Z)", "--atoms", "A=1")[0] == 2


def test_braid_commands():
    assert "equal" in run("braid", "s1 s2 s1", "s2 s1 s2")[1]
    code, out, _ = run("braid", "s1", "s1'", "--expect", "unequal")
    assert code == 0 and out.strip().endswith("unequal")
    assert run("braid", "s1 s1", "e", "--expect", "equal")[0] == 1
    code, out, _ = run(
        "braid", "--morphisms",
        "gT(x,x) (x) id(x) ; aT(x,x,x) ; id(x) (x) gT(x,x)",
        "aT(x,x,x) ; gT(x,x*x) ; aT(x,x,x)",
        "--expect", "equal",
    )
    assert code == 0
    assert run("braid", "--morphisms", "delta(x,x,x)", "id(x)")[0] == 2
    assert run("braid", "s1", "s1", "--strands", "1")[0] == 2


def test_verify_file(tmp_path):
    f = tmp_path / "sq.diag"
    f.write_text("diagram: sq\nvertices:\n  A*B\n  B*A\nedges:\n  0 -> 1 : gT(A,B)\n  1 -> 0 : gT(B,A)\n")
    assert run("verify", str(f), "--atoms", "A=1", "B=1")[0] == 1
    assert run("verify", str(f), "--atoms", "A=1", "B=1", "--expect", "fail")[0] == 0
    assert run("verify", str(f), "--atoms", "A=1", "B=1", "--q1")[0] == 0
    f.write_text("diagram: sq\nvertices:\n  A*B\n  B*A\nedges:\n  0 -> 1 : gT(A,B)\n  1 -> 0 : gT(A,B)\n")
    code, _, err = run("verify", str(f))
    assert code == 2 and "line 7" in err


def test_list_and_usage():
    code, out, _ = run("list")
    assert code == 0 and len(out.splitlines()) == 37
    assert run()[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidcoh", "braid", "s1", "s1'"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "unequal" in proc.stdout
