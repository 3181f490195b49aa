import json

from qpfiber.cli import run
from qpfiber.constructions import q_rep
from qpfiber.graphcalc import ArcEnd, Comb, CombedGraph
from qpfiber.surface import BraidedSurface


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def bigon_doc():
    host = BraidedSurface(q_rep(2))
    graph = CombedGraph(
        host,
        (
            (Comb((ArcEnd(1, 0), ArcEnd(1, 1))),),
            (Comb((ArcEnd(1, 0), ArcEnd(1, 1))),),
        ),
    )
    return graph.to_json()


def test_nabla_verb(capsys):
    code, report = invoke(capsys, "nabla", "--n", "3")
    assert code == 0
    assert report["result"]["representation"]["bands"] == [
        [1, 2, 1], [2, 3, 1], [1, 2, 1], [2, 3, 1], [1, 2, 1], [2, 3, 1],
    ]


def test_output_is_deterministic(capsys):
    run(["qrep", "--n", "3"])
    first = capsys.readouterr().out
    run(["qrep", "--n", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_invalid_parameter_exits_1(capsys):
    code, report = invoke(capsys, "nabla", "--n", "1")
    assert code == 1
    assert report["ok"] is False


def test_unknown_verb_exits_1(capsys):
    assert run(["frobnicate"]) == 1


def test_invariants_verb(tmp_path, capsys):
    path = write_json(tmp_path, "trefoil.json", {"strands": 2, "bands": [[1, 2, 1]] * 3})
    code, report = invoke(capsys, "invariants", "--input", path)
    assert code == 0
    result = report["result"]
    assert result["chi"] == -1
    assert result["boundary"] == 1
    assert result["exponent_sum"] == 3
    assert result["alexander"] == [1, -1, 1]
    assert path in report["inputs"]


def test_quasipositize_bigon_exits_2(tmp_path, capsys):
    path = write_json(tmp_path, "bigon.json", bigon_doc())
    code, report = invoke(capsys, "quasipositize", "--n", "2", "--input", path)
    assert code == 2
    assert report["kind"] == "NotFull"


def test_quasipositize_subset(capsys):
    code, report = invoke(capsys, "quasipositize", "--n", "2", "--subset", "1,2")
    assert code == 0
    assert report["result"]["output"]["bands"] == [[1, 2, 1], [1, 2, 1]]


def test_quasipositize_needs_one_input(capsys):
    code, _ = invoke(capsys, "quasipositize", "--n", "2")
    assert code == 1


def test_reduce_verb(tmp_path, capsys):
    host = BraidedSurface(q_rep(2))
    graph = CombedGraph(
        host,
        (
            (Comb((ArcEnd(1, 0), ArcEnd(1, 1), ArcEnd(2, 0))),),
            (Comb((ArcEnd(1, 0),)), Comb((ArcEnd(1, 1), ArcEnd(2, 0)))),
        ),
    )
    path = write_json(tmp_path, "graph.json", graph.to_json())
    code, report = invoke(capsys, "reduce", "--input", path)
    assert code == 0
    assert len(report["result"]["trace"]) == 1
    assert len(report["result"]["graph"]["arcs"]) == 2


def test_malformed_json_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, report = invoke(capsys, "invariants", "--input", str(path))
    assert code == 1


def test_missing_file_exits_1(capsys):
    code, _ = invoke(capsys, "invariants", "--input", "/nonexistent.json")
    assert code == 1


def test_pad_verb_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"strands": 2, "letters": [[1, 1]]})))
    code, report = invoke(capsys, "pad", "--input", "-")
    assert code == 0
    assert report["result"]["n"] == 2


def test_expand_verb(tmp_path, capsys):
    path = write_json(tmp_path, "rep.json", {"strands": 3, "bands": [[1, 3, 1]]})
    code, report = invoke(capsys, "expand", "--input", path)
    assert code == 0
    assert report["result"]["word"]["letters"] == [[1, 1], [2, 1]]


def test_verify_fiber_verb(capsys):
    code, report = invoke(capsys, "verify-fiber", "--n", "3")
    assert code == 0
    assert report["result"]["ok"] is True
