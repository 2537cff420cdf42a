import itertools

import pytest
from hypothesis import given, settings, strategies as st

from metricdim import generate
from metricdim.graph import Graph
from metricdim.mdim import (
    SeparationMatrix,
    exact_md_cover,
    exact_md_naive,
    greedy_resolving_set,
    is_resolving_set,
    separates,
    unresolved_pairs,
)

from conftest import complete_graph, cycle_graph, path_graph


def test_separates():
    c4 = cycle_graph(4)
    assert separates(c4, 0, 0, 1)
    assert not separates(c4, 0, 1, 3)
    with pytest.raises(ValueError):
        separates(c4, 0, 1, 1)


def test_unresolved_examples():
    g = cycle_graph(5)
    assert unresolved_pairs(g, range(5)) == []
    assert unresolved_pairs(g, []) == list(itertools.combinations(range(5), 2))
    assert unresolved_pairs(path_graph(3), [1]) == [(0, 2)]


def test_unreachable_vertices():
    g = Graph.from_edges(4, [(0, 1)])
    # 2 and 3 are both unreachable from 0 and 1
    assert unresolved_pairs(g, [0, 1]) == [(2, 3)]
    assert exact_md_naive(g, 4)[0] == 2
    assert exact_md_cover(g)[0] == 2


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_naive_path(n):
    size, witness = exact_md_naive(path_graph(n), n)
    assert size == 1 and witness == {0}


def test_naive_examples():
    assert exact_md_naive(complete_graph(4), 4)[0] == 3
    assert exact_md_naive(cycle_graph(5), 5)[0] == 2
    assert exact_md_naive(Graph.from_edges(1, []), 1) == (0, set())
    assert exact_md_naive(complete_graph(4), 2) == (None, None)


def test_cover_examples():
    assert exact_md_cover(path_graph(4), forced=[0]) == (1, {0})
    assert exact_md_cover(complete_graph(4))[0] == 3
    assert exact_md_cover(complete_graph(4), budget=2) is None
    assert exact_md_cover(complete_graph(4), forced=[0, 1], budget=1) is None
    assert exact_md_cover(Graph.from_edges(0, [])) == (0, set())


def test_cover_restricted_candidates():
    # on P5 only the middle vertex is allowed besides a forced one
    g = path_graph(5)
    assert exact_md_cover(g, candidates=[2]) is None
    assert exact_md_cover(g, forced=[2], candidates=[1])[0] == 2


def test_separation_matrix():
    g = path_graph(3)
    m = SeparationMatrix.build(g, [(0, 2)], [0, 1, 2])
    assert [m.cell(0, c) for c in range(3)] == [True, False, True]


def test_greedy_examples():
    g = path_graph(4)
    assert greedy_resolving_set(g) == {0}
    assert len(greedy_resolving_set(complete_graph(4))) == 3
    assert greedy_resolving_set(Graph.from_edges(1, [])) == set()


def test_cover_equals_naive_small():
    for g in generate.connected_graphs(5):
        assert exact_md_cover(g)[0] == exact_md_naive(g, g.vertex_count)[0]


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_solvers_agree(g):
    naive_size, naive_set = exact_md_naive(g, g.vertex_count)
    size, witness = exact_md_cover(g)
    assert size == naive_size
    assert is_resolving_set(g, witness) and is_resolving_set(g, naive_set)
    greedy = greedy_resolving_set(g)
    assert is_resolving_set(g, greedy) and len(greedy) >= size
    assert unresolved_pairs(g, greedy) == []
