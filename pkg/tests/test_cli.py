import json

import pytest

from yoke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_info(capsys):
    data = run_json(capsys, "info", "--n", "3", "--m", "3")
    assert data["vertices"] == 24 and data["edges"] == 36
    assert data["diameter"] == data["ecc_zero"] == 6
    assert data["generated_group"] == {"order": 12, "tag": "D_6"}


def test_info_text(capsys):
    code, out, _ = run(capsys, "info", "--n", "3", "--m", "3")
    assert code == 0 and "24" in out and "D_6" in out


@pytest.mark.parametrize("method", ["formula", "bfs"])
def test_dist(capsys, method):
    data = run_json(capsys, "dist", "--n", "3", "--m", "3", "--from", "2,0,1,1,2", "--method", method)
    assert data["distance"] == 3


def test_dist_dyoke_negative_entries(capsys):
    from yoke.core import GraphParams, Kind, make_dyoke_vertex, vertex_index
    from yoke.search import indexed_graph

    data = run_json(capsys, "dist", "--n", "3", "--m", "2", "--dyoke", "--from", "0,-1,1", "--method", "bfs")
    p = GraphParams(3, 2)
    g = indexed_graph(p, Kind.DYOKE)
    want = g.distances_to_zero()[vertex_index(make_dyoke_vertex(p, (0, -1, 1)))]
    assert data["distance"] == want
    # the closed form covers Yoke vertices only
    assert run(capsys, "dist", "--n", "3", "--m", "2", "--dyoke", "--from", "0,-1,1")[0] == 2


def test_neighbors(capsys):
    data = run_json(capsys, "neighbors", "--n", "3", "--m", "3", "--vertex", "0,0,0,0")
    assert {tuple(x["vertex"]) for x in data["neighbors"]} == {(2, 1, 0, 0, 0), (0, 0, 0, 1, 2)}


def test_ecc_and_diam(capsys):
    assert run_json(capsys, "ecc-zero", "--n", "1", "--m", "5")["ecc_zero"] == 9
    assert run_json(capsys, "diam", "--n", "4", "--m", "5")["diameter"] == 12
    assert run_json(capsys, "diam", "--n", "3", "--m", "3", "--mode", "naive")["diameter"] == 6


def test_pivots(capsys):
    code, out, _ = run(capsys, "pivots", "--n", "3", "--m", "3", "--vertex", "0,1,1,1")
    data = json.loads(out)
    assert code == 0
    assert data["pivots"] == [-1, 0, 3, 4]


def test_word(capsys):
    data = run_json(capsys, "word", "run", "--n", "3", "--m", "3", "--start", "2,0,1,1,2", "--word", "R3,L0,L1")
    assert data == {"is_path": True, "vertex": [0, 0, 0, 0, 0]}


def test_aut(capsys):
    assert run_json(capsys, "aut", "--n", "1", "--m", "3", "--brute-force")["count"] == 16
    data = run_json(capsys, "aut", "apply", "--n", "3", "--m", "3", "--map", "phi", "--vertex", "0,0,0,0")
    assert data["vertex"] == [1, 0, 0, 0, 2]
    code, _, err = run(capsys, "aut", "--n", "3", "--m", "2")
    assert code == 0 or "m = 2" in err


def test_dom(capsys):
    data = run_json(capsys, "dom", "meet", "--vec", "1,-2,1", "--vec", "-1,2,-1")
    assert list(data.values())[0] == [-1, 0, 1]


def test_family_roundtrip(capsys):
    assert run_json(capsys, "family", "arcperm", "to-yoke", "4321")["vertex"] == [3, 0, 0, 1]
    data = run_json(capsys, "family", "caterpillar", "from-yoke", "--n", "8", "--vertex", "7,1,1,1,0,1,5")
    edges = json.dumps(data["edges"])
    assert run_json(capsys, "family", "caterpillar", "to-yoke", edges)["vertex"] == [7, 1, 1, 1, 0, 1, 5]


def test_export(capsys, tmp_path):
    out = tmp_path / "y.jsonl"
    code, _, _ = run(capsys, "export", "--n", "2", "--m", "2", "--format", "jsonl", "-o", str(out))
    assert code == 0
    assert len(out.read_text().splitlines()) == 10


def test_verify(capsys):
    data = run_json(capsys, "verify", "--suite", "dominance", "--pairs", "100")
    assert data["ok"]


def test_usage_errors(capsys):
    assert run(capsys, "dist", "--n", "3", "--m", "3", "--from", "9,9")[0] == 2
    assert run(capsys, "info", "--n", "0", "--m", "3")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "family", "arcperm", "from-yoke")[0] == 2
