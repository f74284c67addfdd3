"""End-to-end CLI runs through main(argv)."""

import json

import pytest

from cbp.cli import main

PATH3 = "0 1\n1 2\n2 3\n"
BOWTIE = "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="graph.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_blocks(graph_file, capsys):
    code, out, _ = run(capsys, ["blocks", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert [b["vertices"] for b in payload["blocks"]] == [[0, 1], [1, 2], [2, 3]]
    assert payload["cut_vertices"] == [1, 2]
    assert payload["class"]["is_block_path"] is True
    assert len(payload["tree"]["nodes"]) == 5
    assert len(payload["tree"]["edges"]) == 4


def test_vertices(graph_file, capsys):
    code, out, _ = run(capsys, ["vertices", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 3
    assert payload["count"] == 7
    assert payload["vertices"][0] == []
    assert payload["vertices"][-1] == [0, 1, 2]


def test_facets(graph_file, capsys):
    code, out, _ = run(capsys, ["facets", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 3
    assert payload["count"] == 7
    kinds = [row["kind"] for row in payload["rows"]]
    assert kinds.count("nonnegativity") == 3
    assert kinds.count("independent-blocks") == 4
    assert {"coeffs": [1, -1, 1], "rhs": 1, "kind": "independent-blocks"} in payload["rows"]


def test_facets_cap(graph_file, capsys):
    code, _, err = run(
        capsys, ["facets", "--graph", graph_file(PATH3), "--max-blocks", "2"]
    )
    assert code == 1
    assert "CountOverflow" in err


def test_edges_both_methods_agree(graph_file, capsys):
    path = graph_file(PATH3)
    _, out_a, _ = run(capsys, ["edges", "--graph", path])
    _, out_b, _ = run(capsys, ["edges", "--graph", path, "--method", "geometric"])
    a, b = json.loads(out_a), json.loads(out_b)
    assert a["method"] == "combinatorial"
    assert b["method"] == "geometric"
    assert a["edges"] == b["edges"]
    assert a["vertex_count"] == 7


def test_diameter(graph_file, capsys):
    code, out, _ = run(capsys, ["diameter", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert payload["diameter"] == 2
    assert payload["dim"] == 3
    assert payload["facet_count"] == 7
    assert payload["hirsch_ok"] is True
    assert payload["is_simple"] is False


def test_hstar(graph_file, capsys):
    code, out, _ = run(
        capsys, ["hstar", "--graph", graph_file(PATH3), "--max-dilation", "5"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["hstar"] == [1, 3, 1, 0]
    assert payload["narayana_index"] == 3
    assert payload["evaluations"]["3"] == 54
    assert payload["evaluations"]["5"] == 181
    assert all(payload["clauses"].values())


def test_hstar_rejects_small_dilation(graph_file, capsys):
    code, _, err = run(
        capsys, ["hstar", "--graph", graph_file(PATH3), "--max-dilation", "2"]
    )
    assert code == 2
    assert "error:" in err


def test_groebner(graph_file, capsys):
    code, out, _ = run(capsys, ["groebner", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert payload["variable_count"] == 7
    assert payload["binomial_count"] == 5
    assert payload["is_groebner"] is True
    assert payload["fiber_test"] is True
    plus_keys = {tuple(sorted(b["plus"])) for b in payload["binomials"]}
    assert ("0", "1") in plus_keys


def test_groebner_refusal(graph_file, capsys):
    code, out, err = run(
        capsys,
        ["groebner", "--graph", graph_file(PATH3), "--groebner-max-blocks", "2"],
    )
    assert code == 1
    assert out == ""
    assert "refusing" in err


def test_triangulate(graph_file, capsys):
    code, out, _ = run(capsys, ["triangulate", "--graph", graph_file(PATH3)])
    assert code == 0
    payload = json.loads(out)
    assert payload["face_count"] == 5
    assert payload["f_vector"] == [1, 7, 16, 15, 5]
    assert payload["h_vector"] == [1, 3, 1, 0, 0]
    assert payload["hstar"] == [1, 3, 1, 0]
    assert all(len(f) == 4 for f in payload["maximal_faces"])


def test_optimize_block_weights(graph_file, tmp_path, capsys):
    weights = tmp_path / "w.txt"
    weights.write_text("1\n-2\n1\n")
    code, out, _ = run(
        capsys,
        ["optimize", "--graph", graph_file(PATH3), "--weights", str(weights)],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"blocks": [0], "edges": [[0, 1]], "value": "1/1"}


def test_optimize_tree_mode(graph_file, tmp_path, capsys):
    weights = tmp_path / "w.txt"
    weights.write_text("2\n3\n4\n")
    star = graph_file("0 1\n0 2\n0 3\n")
    code, out, _ = run(
        capsys,
        ["optimize", "--graph", star, "--edge-weights", str(weights), "--mode", "tree"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "9/1"
    assert payload["edges"] == [[0, 1], [0, 2], [0, 3]]


def test_optimize_eulerian_mode(graph_file, tmp_path, capsys):
    weights = tmp_path / "w.txt"
    weights.write_text("1\n1\n1\n1\n1\n1\n")
    code, out, _ = run(
        capsys,
        [
            "optimize",
            "--graph",
            graph_file(BOWTIE),
            "--edge-weights",
            str(weights),
            "--mode",
            "eulerian",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "6/1"
    assert len(payload["edges"]) == 6


def test_optimize_edge_weights_need_mode(graph_file, tmp_path, capsys):
    weights = tmp_path / "w.txt"
    weights.write_text("1\n1\n1\n")
    code, _, err = run(
        capsys,
        ["optimize", "--graph", graph_file(PATH3), "--edge-weights", str(weights)],
    )
    assert code == 2
    assert "requires --mode" in err


def test_optimize_weight_flags_exclusive(graph_file, tmp_path):
    weights = tmp_path / "w.txt"
    weights.write_text("1\n")
    with pytest.raises(SystemExit) as exc:
        main(
            [
                "optimize",
                "--graph",
                graph_file(PATH3),
                "--weights",
                str(weights),
                "--edge-weights",
                str(weights),
            ]
        )
    assert exc.value.code == 2


def test_corpus_listing(graph_file, capsys):
    code, out, _ = run(capsys, ["corpus", "--max-blocks", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 18
    names = [g["name"] for g in payload["graphs"]]
    assert "path-3" in names
    assert "flower-pendant-3" in names
    code2, out2, _ = run(capsys, ["corpus", "--max-blocks", "3"])
    assert out2 == out


def test_verify_small_corpus(capsys, monkeypatch):
    monkeypatch.setenv("CBP_THREADS", "2")
    code, out, _ = run(capsys, ["verify", "--max-blocks", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert payload["graph_count"] == 18


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, ["blocks", "--graph", "/nonexistent/g.txt"])
    assert code == 2
    assert "error:" in err


def test_bad_graph_is_usage_error(graph_file, capsys):
    code, _, err = run(capsys, ["blocks", "--graph", graph_file("0 0\n")])
    assert code == 2
    assert "error:" in err


def test_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
