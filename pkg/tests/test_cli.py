import json

import pytest

from metricdim.cli import main


@pytest.fixture
def files(tmp_path):
    k2 = tmp_path / "k2.json"
    k2.write_text(json.dumps({"v1": ["a"], "v2": ["b"], "edges": [["a", "b"]], "h": 1}))
    p4 = tmp_path / "p4.txt"
    p4.write_text("p 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    two = tmp_path / "two.txt"
    two.write_text("p 2 1\ne 1 2\n")
    return {"k2": str(k2), "p4": str(p4), "two": str(two), "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_edge_probabilities(capsys):
    code, out, _ = run(capsys, "gen", "--n1", "2", "--n2", "3", "--p", "0")
    assert code == 0 and json.loads(out)["edges"] == []
    code, out, _ = run(capsys, "gen", "--n1", "2", "--n2", "3", "--p", "1")
    assert len(json.loads(out)["edges"]) == 6


def test_gen_deterministic(capsys, files):
    a, b = files["dir"] / "a.json", files["dir"] / "b.json"
    assert main(["gen", "--seed", "9", "--n1", "3", "--n2", "3", "-o", str(a)]) == 0
    assert main(["gen", "--seed", "9", "--n1", "3", "--n2", "3", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_reduce(capsys, files):
    code, out, _ = run(capsys, "reduce", files["k2"], "--y", "min")
    data = json.loads(out)
    assert code == 0 and data["k"] == 7 and data["n"] == 4 and data["y"] == 42
    code, _, err = run(capsys, "reduce", files["k2"], "--y", "57")
    assert code == 2 and "even" in err
    g, lab = files["dir"] / "g.txt", files["dir"] / "l.json"
    code, out, _ = run(capsys, "reduce", files["k2"], "--graph-out", str(g), "--labels-out", str(lab))
    assert code == 0 and g.read_text().startswith(f"p {json.loads(out)['vertices']} ")


def test_reduce_auto_y_n6(capsys, files):
    path = files["dir"] / "p4.json"
    path.write_text(json.dumps({"v1": ["a", "c"], "v2": ["b", "d"],
                                "edges": [["a", "b"], ["c", "b"], ["c", "d"]], "h": 1}))
    code, out, _ = run(capsys, "reduce", str(path))
    data = json.loads(out)
    assert data["n"] == 6 and data["y"] == 360 and data["k"] == 7


def test_solve_md(capsys, files):
    code, out, _ = run(capsys, "solve-md", files["p4"], "--mode", "naive")
    assert code == 0 and json.loads(out)["size"] == 1
    code, out, _ = run(capsys, "solve-md", files["two"], "--max-k", "0")
    assert code == 1 and json.loads(out)["answer"] == "no"
    code, out, _ = run(capsys, "solve-md", files["two"], "--max-k", "0", "--mode", "naive")
    assert code == 1
    code, out, _ = run(capsys, "solve-md", files["p4"], "--mode", "greedy")
    assert code == 0 and json.loads(out)["witness"] == [0]


def test_solve_ds(capsys, files):
    code, out, _ = run(capsys, "solve-ds", files["k2"])
    assert code == 0 and json.loads(out)["witness"] == ["a"]


def test_rbds(capsys, files):
    dump = files["dir"] / "rb.json"
    code, out, _ = run(capsys, "rbds", files["p4"], "--k", "1", "--dump", str(dump))
    assert code == 0 and json.loads(out)["size"] == 1
    assert len(json.loads(dump.read_text())["blue"]) == 6
    code, _, _ = run(capsys, "rbds", files["two"], "--k", "0")
    assert code == 1


def test_verify_k2(capsys, files):
    code, out, err = run(capsys, "verify", files["k2"])
    assert code == 0
    assert json.loads(out.splitlines()[0])["ok"]
    assert "1 with zero failures" in err


def test_errors(capsys, files):
    assert run(capsys, "solve-md", str(files["dir"] / "missing"))[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify")[0] == 2
    bad = files["dir"] / "bad.json"
    bad.write_text("{")
    assert run(capsys, "solve-ds", str(bad))[0] == 2
