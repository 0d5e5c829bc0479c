import json
import subprocess
import sys

import pytest

from qmatroids.battery import p1
from qmatroids.cli import main
from qmatroids.errors import BudgetExceeded
from qmatroids.gf import make_field
from qmatroids.io import DescriptionError, load, parse_family, parse_json
from qmatroids.qmatroid import rank_table, uniform


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_errors_carry_position():
    with pytest.raises(DescriptionError) as exc:
        parse_json('{\n  "q": 2,\n  "n": }')
    assert exc.value.line == 3 and exc.value.column == 8
    assert "line 3" in str(exc.value)
    with pytest.raises(DescriptionError):
        parse_json("[1, 2]")


def test_family_parsing():
    assert parse_family("uniform:q=2,k=1,n=3") == ("uniform", {"q": "2", "k": "1", "n": "3"})
    name, params = parse_family("code:q=2,m=2,matrix=1,2;0,1")
    assert name == "code" and params["matrix"] == "1,2;0,1"
    with pytest.raises(DescriptionError):
        load(family="nosuch:q=2")
    with pytest.raises(DescriptionError):
        load(family="uniform:q=2,k")


def test_json_descriptions_roundtrip():
    M = load('{"q": 2, "m": 2, "n": 3, "kind": "representable", "matrix": [[0, 0, 1]]}').obj
    assert M == p1()
    U = uniform(1, 2, make_field(2))
    entries = [{"space": [list(r) for r in S.rows], "rank": r} for S, r in rank_table(U).items()]
    T = load(json.dumps({"q": 2, "n": 2, "kind": "table", "table": entries})).obj
    assert T == U
    flat = load(json.dumps({"q": 2, "n": 2, "kind": "table", "table": list(U.ranks)})).obj
    assert flat == U
    cl = load('{"q": 1, "kind": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[2,0]]}')
    assert cl.kind == "classical" and cl.obj.r == 2
    code = load('{"q": 2, "m": 2, "n": 2, "k": 1, "basis": "default", "matrix": [[1, 2]]}')
    assert code.kind == "code"
    with pytest.raises(DescriptionError):
        load('{"q": 2, "m": 2, "k": 2, "basis": "default", "matrix": [[1, 2]]}')
    with pytest.raises(DescriptionError):
        load('{"q": 2, "n": 2, "kind": "table", "table": [0, 1]}')


def test_budget_guard_on_load():
    with pytest.raises(BudgetExceeded):
        load(family="uniform:q=3,k=2,n=6", budget=1000)


def test_cli_euler_examples(capsys):
    code, out, _ = run(capsys, "euler", "--family", "uniform:q=2,k=1,n=3")
    rep = json.loads(out)
    assert code == 0 and rep["chi_census"] == rep["chi_formula"] == 6
    code, out, _ = run(capsys, "euler", "--family", "p1")
    rep = json.loads(out)
    assert rep["chi_census"] == 3 and rep["mu_bar"] == 0
    assert rep["lambda"] == {"1,2": 3, "2,1": 3, "3,1": 1}
    code, out, _ = run(capsys, "euler", "--family", "uniform:q=2,k=3,n=3")
    assert json.loads(out)["chi_census"] == 0 and code == 0


def test_cli_reports_failed_shelling(capsys):
    code, out, err = run(capsys, "euler", "--family", "p1*")
    assert code == 1 and "not a shelling" in err
    assert json.loads(out)["homology"] == {"degree": 1, "rank": 6}


def test_cli_mobius_and_dot(capsys):
    code, out, _ = run(capsys, "mobius", "--family", "uniform:q=2,k=1,n=3")
    rep = json.loads(out)
    assert code == 0 and rep["mu"] == rep["mu_crosscut"] == rep["mu_bruteforce"] == 6
    code, out, _ = run(capsys, "mobius", "--family", "uniform:q=2,k=1,n=3", "--format", "dot")
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "mobius", "--family", "uniform:q=2,k=1,n=4", "--budget-circuits", "10")
    assert code == 0 and json.loads(out)["mu_bruteforce"] is None


def test_cli_classical_and_weights(capsys):
    code, out, _ = run(capsys, "classical", "--family", "classical-uniform:k=2,n=4", "--format", "text")
    assert code == 0 and "chi: -3" in out
    code, out, _ = run(capsys, "classical", "--family", "classical-graphic:vertices=3,edges=0-1;1-2;2-0")
    assert json.loads(out)["chi"] == -1
    code, out, _ = run(capsys, "classical", "--family", "classical-matrix:field=3,matrix=1,0,1;0,1,2")
    assert code == 0
    code, out, _ = run(capsys, "weights", "--family", "code:q=2,m=2,matrix=1,2")
    rep = json.loads(out)
    assert code == 0 and rep["d"] == [2] and rep["lemma62"]["reading"] == "dual"


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "verify", "lemma41")
    assert code == 0 and json.loads(out)["batteries"][0]["ok"]
    code, out, _ = run(capsys, "verify", "theorem32", "--seed", "3")
    assert code == 0
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2


def test_cli_errors_and_output_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"q": 2,\n "kind": "uniform" "n": 2}')
    code, _, err = run(capsys, "euler", "--input", str(bad))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "euler", "--family", "code:q=2,m=2,matrix=1,2")
    assert code == 2
    code, _, err = run(capsys, "weights", "--family", "p1", "--format", "dot")
    assert code == 2
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "euler", "--family", "p1", "--out", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text())["chi_census"] == 3


def test_reports_are_deterministic(tmp_path):
    outs = []
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "qmatroids", "verify", "crosscut", "--seed", "5"],
                              capture_output=True, text=True, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
