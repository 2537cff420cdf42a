"""Exhaustive and seeded-random instance families for the test suites.

All randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with a single integer.  A given seed always yields the same sequence
of instances.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from typing import Iterator

import networkx as nx

from .bds import BipartiteInstance
from .graph import Graph


def _connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _canonical_bipartite(s: int, t: int, edges) -> tuple:
    """Smallest sorted edge tuple over relabelings within each side."""
    best = None
    for p1 in permutations(range(s)):
        for p2 in permutations(range(t)):
            key = tuple(sorted((p1[u], s + p2[v - s]) for u, v in edges))
            if best is None or key < best:
                best = key
    return best


def connected_bipartite_instances(max_n: int, h: int = 1) -> Iterator[BipartiteInstance]:
    """Every connected bipartite graph on at most ``max_n`` vertices, with sides.

    Sides are ordered (``V1`` first), and graphs that differ only by a
    relabeling inside a side are listed once.  The single vertex counts as
    connected (``s = 1``, empty ``V2``).
    """
    if max_n >= 1:
        yield BipartiteInstance.from_edges(1, 0, [], h)
    for n in range(2, max_n + 1):
        for s in range(1, n):
            t = n - s
            slots = [(u, s + v) for u in range(s) for v in range(t)]
            seen = set()
            for m in range(n - 1, len(slots) + 1):
                for edges in combinations(slots, m):
                    if not _connected(n, edges):
                        continue
                    key = _canonical_bipartite(s, t, edges)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield BipartiteInstance.from_edges(s, t, key, h)


def random_bipartite(rng: random.Random, n1: int, n2: int, edge_prob: float, h: int = 1) -> BipartiteInstance:
    """Each of the ``n1 * n2`` cross pairs becomes an edge with probability ``edge_prob``."""
    edges = [(a, n1 + b) for a, b in product(range(n1), range(n2)) if rng.random() < edge_prob]
    names = [f"a{k + 1}" for k in range(n1)] + [f"b{k + 1}" for k in range(n2)]
    return BipartiteInstance.from_edges(n1, n2, edges, h, names)


def random_bipartite_instances(seed: int, count: int, max_n: int) -> list[BipartiteInstance]:
    """``count`` random instances with ``2 <= n1 + n2 <= max_n`` and random density."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        n1 = rng.randint(1, n - 1)
        p = rng.uniform(0.2, 0.9)
        out.append(random_bipartite(rng, n1, n - n1, p))
    return out


def connected_graphs(max_n: int) -> list[Graph]:
    """All connected graphs with 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(h):
            out.append(Graph.from_edges(n, map(tuple, h.edges())))
    return out


def random_graph(rng: random.Random, n: int, edge_prob: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


def random_graphs(seed: int, count: int, max_n: int, connected: bool = False) -> list[Graph]:
    """``count`` G(n, p) graphs with ``1 <= n <= max_n`` and ``p`` uniform in [0, 1)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        g = random_graph(rng, n, rng.random())
        if connected and not _connected(n, g.edges()):
            continue
        out.append(g)
    return out
