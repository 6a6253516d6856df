import json
import re

import numpy as np
import pytest
from click.testing import CliRunner

from wlpkit import io as wio
from wlpkit.cli import main
from wlpkit.complexes import independence_complex
from wlpkit.graphs import gen_broom, gen_complete, whisker
from wlpkit.reproduce import EXPECTED, merged_expected, reproduce
from wlpkit.search import canonical_key, labeled_graphs, search

from conftest import all_labeled_graphs, random_graphs
from test_algebra import K3_MATRIX


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)
    return invoke


@pytest.mark.parametrize("G", list(all_labeled_graphs(4)) + random_graphs(30))
def test_graph_round_trips(G):
    assert wio.parse_edge_list(wio.render_edge_list(G)) == G
    assert wio.graph_from_json(json.loads(json.dumps(wio.graph_to_json(G)))) == G
    D = independence_complex(whisker(G))
    assert wio.parse_facets(wio.render_facets(D)) == D
    assert wio.complex_from_json(wio.complex_to_json(D)) == D


def test_format_errors(tmp_path):
    with pytest.raises(wio.FormatError):
        wio.parse_edge_list("")
    with pytest.raises(wio.FormatError):
        wio.parse_edge_list("3\n0 x\n")
    with pytest.raises(wio.FormatError):
        wio.load_graph("nope:3")
    f = tmp_path / "g.json"
    f.write_text('{"n": 3, "edges": [[0, 1], [1, 2]]}')
    assert wio.load_graph(str(f)).num_edges() == 2
    f = tmp_path / "g.txt"
    f.write_text("# path\n3\n0 1\n1 2\n")
    assert wio.load_graph(str(f)).num_edges() == 2


def test_matrix_dump_round_trip():
    assert wio.render_matrix(np.eye(2, dtype=int)) == "2 2\n1 0\n0 1\n"
    text = wio.render_matrix(K3_MATRIX, [str(i) for i in range(9)], list("abcdef"))
    np.testing.assert_array_equal(wio.parse_matrix(text), K3_MATRIX)
    np.testing.assert_array_equal(wio.parse_matrix(wio.render_matrix(K3_MATRIX)), K3_MATRIX)
    assert wio.render_matrix_market(K3_MATRIX).startswith("%%MatrixMarket matrix coordinate integer")


def test_graph6():
    assert wio.graph6(gen_complete(3)) == "Bw"


def test_cli_gen_and_whisker(run):
    r = run("gen", "broom:1")
    assert r.output == "4\n0 1\n1 2\n2 3\n"
    r = run("--format", "json", "whisker", "edgeless:2")
    assert json.loads(r.output) == {"n": 4, "edges": [[0, 2], [1, 3]]}
    r = run("complex", "edgeless:2", "--whisker")
    assert r.output == "4\n0 1\n0 3\n1 2\n2 3\n"


def test_cli_hilbert_and_pm(run):
    r = run("hilbert", "broom:1", "--whisker")
    assert r.output.splitlines()[0] == "1 8 21 22 8"
    r = run("--format", "json", "pm-check", "edgeless:2", "--whisker")
    d = json.loads(r.output)
    assert r.exit_code == 0 and d["is_pseudomanifold"] and not d["has_boundary"]


def test_cli_maps_char2(run):
    r = run("--char", "2", "maps", "complete:3", "--whisker", "--degree", "1")
    lines = r.output.splitlines()
    assert lines[0] == "9 6"
    assert lines[1] == "- x1 x2 x3 y1 y2 y3"
    assert lines[2] == "x1y2 1 0 0 0 1 0"
    assert lines[-1] == "rank mod 2 = 5"
    body = np.array([[int(t) for t in ln.split()[1:]] for ln in lines[2:11]])
    np.testing.assert_array_equal(body, K3_MATRIX)


def test_cli_maps_top_and_zero(run):
    r = run("maps", "broom:5", "--whisker", "--degree", "7", "--no-labels")
    lines = r.output.splitlines()
    assert lines[0] == "98 477" and lines[-1].startswith("rank over Q") and lines[-1].endswith("= 98")
    r = run("maps", "path:1", "--whisker", "--degree", "0", "--no-labels")
    assert r.output.splitlines()[:3] == ["2 1", "1", "1"]


def test_cli_usage_errors(run):
    assert run("--char", "4", "wlp", "broom:1").exit_code == 2
    assert run("maps", "broom:1", "--whisker", "--degree", "9").exit_code == 2
    assert run("wlp", "nonsense").exit_code == 2


def test_cli_wlp_text_json_agree(run):
    text = run("wlp", "broom:1", "--whisker")
    js = run("--format", "json", "wlp", "broom:1", "--whisker")
    assert text.exit_code == js.exit_code == 1
    d = json.loads(js.output)
    rows = [ln for ln in text.output.splitlines() if re.match(r"^\d+->\d+\t", ln)]
    parsed = [(int(ln.split("->")[0]), int(ln.split("rank ")[1].split("\t")[0]),
               ln.endswith("yes")) for ln in rows]
    assert parsed == [(m["i"], m["rank"], m["full"]) for m in d["maps"]]
    assert text.output.splitlines()[1] == "hilbert " + " ".join(map(str, d["hilbert"]))
    assert d["failing"] == [2]


def test_cli_wlp_out_file(run, tmp_path):
    out = tmp_path / "r.json"
    r = run("--format", "json", "--out", str(out), "wlp", "complete:5", "--whisker")
    assert r.exit_code == 0 and json.loads(out.read_text())["wlp"] is True


def test_cli_conjecture(run):
    r = run("conjecture", "--m", "1", "--m", "3")
    assert r.exit_code == 0
    assert r.output.splitlines()[:2] == ["m=1\tnot_in_image=True", "m=3\tnot_in_image=True"]


def test_reproduce_sabotage_names_cell(run):
    r = run("reproduce", "--items", "a", "--expect", "b5.rank.4=827")
    assert r.exit_code == 1
    assert "FAIL (a)" in r.output and "rank[4→5]: expected 827, got 826" in r.output


def test_reproduce_char_override_item_c(run):
    r = run("--char", "2", "reproduce", "--items", "c")
    assert r.exit_code == 0 and "rank mod 2 = 5" in r.output
    r = run("--char", "3", "reproduce", "--items", "c")
    assert r.exit_code == 0 and "rank mod 3 = 6" in r.output


def test_reproduce_deterministic():
    a = [x.to_dict() for x in reproduce(items="abcde", seed=5)]
    b = [x.to_dict() for x in reproduce(items="abcde", seed=5)]
    assert a == b and all(x["passed"] for x in a)


def test_merged_expected_does_not_mutate():
    exp = merged_expected({"k5.wlp": False})
    assert exp["k5"]["wlp"] is False and EXPECTED["k5"]["wlp"] is True


def test_search_small(run):
    found = list(search(2))
    edge = [f for f in found if f.graph.n == 2 and f.graph.num_edges() == 1]
    assert len(edge) == 1 and edge[0].has_wlp
    r = run("search", "--max-n", "2")
    # the edgeless pair fails at degree 1
    assert r.exit_code == 1
    assert r.output.splitlines()[-1] == "# graphs 3  wlp 2  no-wlp 1"
    assert "failing=1" in r.output


def test_search_include(run):
    found = list(search(0, include=[gen_broom(5), gen_complete(5)]))
    assert found[0].failing == [4, 5, 6] and not found[0].has_wlp
    assert found[1].has_wlp
    r = run("--format", "json", "search", "--include", "broom:5")
    assert r.exit_code == 1 and json.loads(r.output)["findings"][0]["failing"] == [4, 5, 6]


def test_canonical_key_is_isomorphism_invariant():
    keys = {}
    for G in labeled_graphs(4):
        keys.setdefault(canonical_key(G), []).append(G)
    assert len(keys) == 11  # non-isomorphic graphs on 4 vertices
