import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import hpolys_sqrt, sqrt_rats, square_mats
from jordan import serialize
from jordan.cgc import deformed_cgc_table
from jordan.cli import main
from jordan.exact import HalfInt, HPoly, Mat, Q, SqrtRat, sqrt_rat
from jordan.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rep_h_text(capsys):
    code, out, _ = run(capsys, "rep", "--j", "2", "--gen", "H", "--basis", "v")
    assert code == 0
    lines = out.splitlines()[2:]
    assert [ln.split()[1:] for ln in lines] == [["-2", "0", "0"], ["0", "0", "0"], ["0", "0", "2"]]


def test_rep_x_trivial(capsys):
    code, out, _ = run(capsys, "rep", "--j", "0", "--gen", "X", "--format", "json")
    m = serialize.decode_matrix(json.loads(out)["payload"]["matrix"])
    assert code == 0 and m.shape == (1, 1) and m.is_zero()


def test_rep_y_json(capsys):
    _, out, _ = run(capsys, "rep", "--j", "2", "--gen", "Y", "--basis", "v", "--format", "json")
    rec = serialize.OutputRecord.from_json(out)
    assert rec.command == {"name": "rep", "j": 2, "gen": "Y", "basis": "v"}
    y = serialize.decode_matrix(rec.payload["matrix"])
    # lowering entries (j+m)(j-m+1): m=0 -> 2, m=1 -> 2
    assert y[0, 1] == 2 and y[1, 2] == 2
    assert y[2, 1] == HPoly.monomial(Q(-1, 4), 2)


def test_rep_text_renders_polynomials(capsys):
    _, out, _ = run(capsys, "rep", "--j", "2", "--gen", "coshHalfInv")
    assert "-(1/8)h^2" in out


def test_rep_latex_e_basis(capsys):
    _, out, _ = run(capsys, "rep", "--j", "2", "--gen", "Y", "--basis", "e", "--format", "latex")
    assert out.startswith("\\begin{pmatrix}") and "\\sqrt{2}" in out


@pytest.mark.parametrize("argv", [["rep", "--j", "-1"], ["rep", "--j", "x"], ["rep", "--j", "1", "--gen", "W"],
                                  ["cgc", "--j1", "1"], ["verify", "--max-2j", "-2"]])
def test_invalid_flags_exit_nonzero(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0


def test_cgc_worked_values(capsys):
    _, out, _ = run(capsys, "cgc", "--j1", "4", "--j2", "4", "--j", "6", "--format", "json")
    table = serialize.decode_table(json.loads(out)["payload"]["table"])
    assert table[3, 2, 0, 2] == HPoly.const(sqrt_rat(Q(1, 2)))
    assert table[3, 2, 0, 3] == HPoly()
    assert table[3, 2, 0, -1] == HPoly.monomial(-18 * sqrt_rat(Q(1, 5)), 3)


def test_cgc_identity_coupling(capsys):
    _, out, _ = run(capsys, "cgc", "--j1", "0", "--j2", "2", "--format", "json")
    m = serialize.decode_table(json.loads(out)["payload"]["table"]).coupling_matrix()
    assert m.shape == (3, 3)
    assert all(m[i, c] == (1 if i == c else 0) for i in range(3) for c in range(3))


@pytest.mark.parametrize("twice", [1, 2])
def test_cgc_pair_h0_orthogonal(capsys, twice):
    _, out, _ = run(capsys, "cgc", "--j1", str(twice), "--j2", str(twice), "--format", "json")
    m = serialize.decode_table(json.loads(out)["payload"]["table"]).coupling_matrix()
    n = (twice + 1) ** 2
    assert m.shape == (n, n)
    m0 = m.map(lambda p: HPoly.const(p.at_zero()))
    gram = m0.T @ m0
    assert all(gram[i, c] == (1 if i == c else 0) for i in range(n) for c in range(n))


def test_cgc_bad_filter_warns(capsys):
    code, out, err = run(capsys, "cgc", "--j1", "2", "--j2", "2", "--j", "8")
    assert code == 0 and "warning" in err and "(empty table)" in out
    _, out, err = run(capsys, "cgc", "--j1", "2", "--j2", "2", "--m", "1", "--format", "json")
    assert "warning" in err and json.loads(out)["payload"]["table"]["entries"] == []


def test_cgc_latex(capsys):
    _, out, _ = run(capsys, "cgc", "--j1", "1", "--j2", "1", "--format", "latex")
    assert "\\frac{" in out and "\\tfrac{1}{2}" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "relations", "--max-2j", "0")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "lemmas")
    assert code == 0 and "FAIL" not in out


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-2j", "4", "--format", "json")
    rec = serialize.OutputRecord.from_json(out)
    assert code == 0 and rec.payload["report"]["passed"]


def test_verify_env_default(capsys, monkeypatch):
    monkeypatch.setenv("JORDAN_MAX_2J", "1")
    _, out, _ = run(capsys, "verify", "--suite", "props", "--format", "json")
    assert json.loads(out)["command"]["max_2j"] == 1


def test_verify_reports_failure(capsys, monkeypatch):
    from jordan import suites

    failing = Report("t")
    failing.add("broken", False, "case x")
    monkeypatch.setattr(suites, "run_suite", lambda *a: failing)
    code, out, _ = run(capsys, "verify", "--suite", "cgc")
    assert code == 1 and "case x" in out


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "jordan.cli", "cgc", "--j1", "3", "--j2", "2", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_schema_is_checked():
    with pytest.raises(ValueError):
        serialize.OutputRecord.from_json('{"schema": "other", "command": {}, "payload": {}}')


@given(sqrt_rats)
def test_scalar_round_trip(x):
    assert serialize.decode_scalar(json.loads(json.dumps(serialize.encode_scalar(x)))) == x


@given(hpolys_sqrt)
def test_hpoly_round_trip(p):
    assert serialize.decode_hpoly(json.loads(json.dumps(serialize.encode_hpoly(p)))) == p


@settings(max_examples=30)
@given(square_mats(3, hpolys_sqrt))
def test_matrix_round_trip(m):
    assert serialize.decode_matrix(json.loads(json.dumps(serialize.encode_matrix(m)))) == m


@pytest.mark.parametrize("pair", [(0, 0), (1, 1), (3, 2), (4, 4)])
def test_table_round_trip(pair):
    t = deformed_cgc_table(HalfInt(pair[0]), HalfInt(pair[1]))
    back = serialize.decode_table(json.loads(json.dumps(serialize.encode_table(t))))
    assert back.entries == t.entries and (back.j1, back.j2) == (t.j1, t.j2)


def test_report_round_trip():
    r = Report("x")
    r.add("a", True)
    r.add("b", False, "detail")
    back = serialize.decode_report(serialize.encode_report(r))
    assert back.lines() == r.lines() and back.passed is False
