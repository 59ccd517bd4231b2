import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cxlattice.cli import run
from cxlattice.io import InputError, emit_dot, load_document, parse_spec, parse_subspace
from cxlattice.relations import Relation, RelationSystem
from cxlattice.space import FiniteSpace, Subspace

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def cli(*argv, doc=None, tmp_path=None):
    if doc is not None:
        path = tmp_path / "in.json"
        path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
        argv = (argv[0], str(path)) + argv[1:]
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_parse_subspace_examples():
    space, A = parse_subspace(b'{"points":["x","y"],"generators":[["1","2"]]}')
    assert space.points == ("x", "y") and A == Subspace.span(space, [(1, 2)])
    space, A = parse_subspace('{"points":["a"],"generators":[]}')
    assert len(space) == 1 and A.rank == 0
    with pytest.raises(InputError, match="exact fractions required"):
        parse_subspace('{"points":["x","y"],"generators":[["0.5","1"]]}')


@pytest.mark.parametrize("doc", [
    '{"points":["x","x"],"generators":[]}',
    '{"points":["x","y"],"generators":[["1"]]}',
    '{"points":["x","y"],"generators":[[0.5, 1]]}',
    '{"points":[],"generators":[]}',
    '{"format": 2, "points":["x"],"generators":[]}',
    '[1, 2]',
    'not json',
])
def test_parse_errors(doc):
    with pytest.raises(InputError):
        parse_spec(load_document(doc))


def test_analyze_aligned_line(tmp_path):
    code, out = cli("analyze", doc={"points": ["x", "y"], "generators": [["1", "2"]]}, tmp_path=tmp_path)
    rep = json.loads(out)
    assert code == 0
    assert rep["format"] == 1 and rep["seed"] == 0
    assert rep["result"]["is_sublattice"] is True
    assert rep["result"]["relations"]["lattice"] == [{"t": "x", "s": "y", "lambda": "1/2"}]


def test_analyze_affine_grid():
    code, out = cli("analyze", str(CORPUS / "affine_grid3.json"))
    res = json.loads(out)["result"]
    assert code == 1 and not res["is_sublattice"]
    assert res["witness"] == {"op": "max", "f": ["0", "1/2", "1"], "g": ["1", "1/2", "0"],
                              "combined": ["1", "1/2", "1"]}


def test_analyze_constants_algebra(tmp_path):
    doc = {"points": ["a", "b", "c"], "generators": [["1", "1", "1"]]}
    code, _ = cli("analyze", "--mode", "algebra", doc=doc, tmp_path=tmp_path)
    assert code == 0


def test_input_error_exit_code(tmp_path, capsys):
    code, _ = cli("analyze", doc={"points": ["x", "y"], "generators": [["0.5", "1"]]}, tmp_path=tmp_path)
    assert code == 2
    assert "exact fractions required" in capsys.readouterr().err
    assert cli("analyze", str(tmp_path / "missing.json"))[0] == 2


def test_relations_hull_witness_commands():
    path = str(CORPUS / "mixed_line.json")
    code, out = cli("relations", path)
    assert code == 1 and json.loads(out)["result"]["relations"] == []
    code, out = cli("hull", path)
    assert code == 1 and json.loads(out)["result"]["hull"]["rank"] == 2
    code, out = cli("witness", path, "--seed", "5", "--budget", "10")
    res = json.loads(out)
    assert code == 1 and res["seed"] == 5
    assert res["result"]["witness"] == {"op": "min", "f": ["-1", "2"], "g": ["-2", "4"], "combined": ["-2", "2"]}
    code, out = cli("witness", str(CORPUS / "aligned_line.json"))
    assert code == 0 and json.loads(out)["result"]["witness"] is None
    code, out = cli("witness", str(CORPUS / "aligned_line.json"), "--mode", "algebra")
    assert code == 1 and json.loads(out)["result"]["witness"]["op"] == "product"


def test_check_member():
    path = str(CORPUS / "pairwise_full_r3.json")
    code, out = cli("check-member", path, "--function", "1,1,1")
    res = json.loads(out)["result"]
    assert code == 1 and res["member"] is False and res["member_by_pairs"] is True
    code, out = cli("check-member", path, "--function", '["1", "2", "1"]')
    assert code == 0 and json.loads(out)["result"]["member"] is True
    assert cli("check-member", path)[0] == 2
    assert cli("check-member", path, "--function", "1,2")[0] == 2


def test_c0_flag_and_label_collision(tmp_path):
    doc = {"points": ["t1", "∞"], "generators": [["1", "2"]]}
    assert cli("analyze", "--c0", doc=doc, tmp_path=tmp_path)[0] == 2
    code, out = cli("relations", "--c0", "--infinity-label", "inf", doc=doc, tmp_path=tmp_path)
    rep = json.loads(out)
    assert code == 0 and rep["c0"] is True and rep["infinity_label"] == "inf"
    assert rep["result"]["relations"] == [{"t": "t1", "s": "∞", "lambda": "1/2"}]


def test_dot_command():
    code, out = cli("dot", str(CORPUS / "relation_defined5.json"))
    assert code == 0
    assert out.startswith("digraph relations {")
    assert '"a" -> "b" [label="λ=1/2"];' in out
    assert '"d" -> "e" [dir=none, color="black:black"];' in out


def test_emit_dot_examples():
    S = FiniteSpace(("x", "y"))
    one = emit_dot(RelationSystem(S, (Relation("x", "y", 1),)))
    assert one.count("->") == 1 and "dir=none" in one
    half = emit_dot(RelationSystem(S, (Relation("x", "y", "1/2"),)))
    assert '"x" -> "y" [label="λ=1/2"];' in half
    empty = emit_dot(RelationSystem(S))
    assert "->" not in empty and '"x";' in empty and '"y";' in empty
    zero = emit_dot(RelationSystem(S, (Relation("x", "x", 0),)))
    assert '"x" [label="x =0"];' in zero


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.json")), ids=lambda p: p.name)
def test_report_echo_roundtrip_and_exit_contract(path):
    from cxlattice.analysis import decide
    from cxlattice.c0 import c0_analyze

    code, out = cli("analyze", str(path))
    rep = json.loads(out)
    _, A = parse_subspace(path.read_bytes())
    _, B = parse_subspace(json.dumps(rep["input"]))
    assert A == B
    mode = rep["mode"]
    holds = c0_analyze(A, mode).decide if rep["c0"] else decide(A, mode)
    assert (code == 0) == holds


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "cxlattice.cli", "analyze", str(CORPUS / "aligned_line.json")],
                          capture_output=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["is_sublattice"] is True
