import json

import pytest

from metricdim import generate
from metricdim.bds import (
    BipartiteInstance,
    InstanceError,
    all_min_dominating_sets,
    denormalize,
    exact_min_dominating_set,
    is_dominating_set,
    load_instance,
    normalize,
    save_instance,
)


def c_even(n):
    # bipartite cycle with sides of size n/2: v0 - w0 - v1 - w1 - ...
    half = n // 2
    edges = []
    for k in range(half):
        edges.append((k, half + k))
        edges.append(((k + 1) % half, half + k))
    return BipartiteInstance.from_edges(half, half, edges)


def test_dominating_examples():
    k2 = BipartiteInstance.from_edges(1, 1, [(0, 1)])
    assert is_dominating_set(k2, {0})
    c4 = c_even(4)
    assert is_dominating_set(c4, {0, 2})
    assert not is_dominating_set(c4, {0})
    isolated = BipartiteInstance.from_edges(2, 1, [(0, 2)])
    assert not is_dominating_set(isolated, {0, 2})
    with pytest.raises(InstanceError):
        is_dominating_set(k2, {5})


def test_exact_examples():
    star = BipartiteInstance.from_edges(1, 3, [(0, 1), (0, 2), (0, 3)])
    assert exact_min_dominating_set(star) == (1, {0})
    assert exact_min_dominating_set(c_even(6))[0] == 2
    assert exact_min_dominating_set(c_even(4))[0] == 2
    assert exact_min_dominating_set(BipartiteInstance.from_edges(0, 0, [])) == (0, set())


def test_solver_cap():
    big = BipartiteInstance.from_edges(9, 8, [])
    with pytest.raises(InstanceError):
        exact_min_dominating_set(big)


def test_all_min_sets_c4():
    sets = all_min_dominating_sets(c_even(4))
    assert all(len(s) == 2 for s in sets)
    # every 2-subset of C4 dominates it
    assert len(sets) == 6


def test_normalize_k2():
    norm = normalize(BipartiteInstance.from_edges(1, 1, [(0, 1)], h=1))
    assert norm.n == 4 and norm.s == 3 and norm.h == 3
    assert norm.edges() == [(0, 3)]
    assert norm.graph.degree(1) == norm.graph.degree(2) == 0
    assert norm.origin == (0, None, None, 1)
    assert denormalize(norm, {0, 1, 2, 3}) == {0, 1}


def test_normalize_edgeless_unchanged():
    inst = BipartiteInstance.from_edges(2, 2, [])
    assert normalize(inst) is inst


def test_normalize_adds_two_to_optimum():
    for inst in generate.connected_bipartite_instances(6):
        norm = normalize(inst)
        assert norm.is_normalized()
        base = exact_min_dominating_set(inst)[0]
        assert exact_min_dominating_set(norm)[0] == base + (2 if norm is not inst else 0)


def test_rejects_non_crossing_edge():
    with pytest.raises(InstanceError):
        BipartiteInstance.from_edges(2, 1, [(0, 1)])
    with pytest.raises(InstanceError):
        BipartiteInstance.from_edges(1, 1, [(0, 1)], h=0)


def test_json_round_trip(tmp_path):
    inst = BipartiteInstance.from_edges(2, 1, [(0, 2), (1, 2)], h=2, names=["x", "y", "z"])
    path = tmp_path / "inst.json"
    save_instance(inst, path)
    data = json.loads(path.read_text())
    assert data == {"v1": ["x", "y"], "v2": ["z"], "edges": [["x", "z"], ["y", "z"]], "h": 2}
    back = load_instance(path)
    assert back.edges() == inst.edges() and back.s == 2 and back.h == 2
    norm = normalize(back)
    assert norm.names == ("x", "y", "_pad1", "_pad2", "z")


@pytest.mark.parametrize("data", [
    {"v1": ["a"], "v2": ["b"], "edges": [["a", "c"]], "h": 1},
    {"v1": ["a"], "v2": ["a"], "edges": [], "h": 1},
    {"v1": ["a"], "edges": [], "h": 1},
    {"v1": ["a", "b"], "v2": [], "edges": [["a", "b"]], "h": 1},
])
def test_json_errors(data):
    with pytest.raises(InstanceError):
        BipartiteInstance.from_json(data)


def test_enumeration_counts():
    counts = {}
    for inst in generate.connected_bipartite_instances(6):
        counts[inst.n] = counts.get(inst.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 4, 5: 10, 6: 27}


def test_random_instances_deterministic():
    a = [i.to_json() for i in generate.random_bipartite_instances(5, 10, 8)]
    b = [i.to_json() for i in generate.random_bipartite_instances(5, 10, 8)]
    assert a == b
