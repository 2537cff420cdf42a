"""Undirected simple graphs, BFS distances and the DIMACS-like edge-list format.

A :class:`Graph` is built by appending vertices and edges, then sealed.  Only
sealed graphs answer distance queries; sealed graphs are immutable, so they
can be shared freely.

Vertices are dense integers ``0 .. n-1``.  Distances to unreachable vertices
are reported as :data:`UNREACHABLE` (``None``) by :func:`bfs_distances`, and as
:data:`UNREACHABLE_INT` (``-1``) in the array form returned by
:func:`distance_matrix`.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

UNREACHABLE = None
UNREACHABLE_INT = -1

DistanceRow = list  # list[Optional[int]], indexed by VertexId


class GraphError(ValueError):
    pass


class Graph:
    """Append-only undirected simple graph, sealed before any distance query."""

    def __init__(self, vertex_count: int = 0):
        if vertex_count < 0:
            raise GraphError("vertex count must be nonnegative")
        self._adj: list[set[int]] = [set() for _ in range(vertex_count)]
        self._edge_count = 0
        self._sealed: Optional[tuple[tuple[int, ...], ...]] = None
        self._csr = None

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(vertex_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g.seal()

    # -- build phase -------------------------------------------------------

    def _check_open(self):
        if self._sealed is not None:
            raise GraphError("graph is sealed")

    def add_vertex(self) -> int:
        self._check_open()
        self._adj.append(set())
        return len(self._adj) - 1

    def add_vertices(self, count: int) -> list[int]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: int, v: int) -> None:
        self._check_open()
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if v in self._adj[u]:
            raise GraphError(f"parallel edge {{{u}, {v}}}")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1

    def add_path(self, u: int, v: int, length: int) -> list[int]:
        """Join ``u`` and ``v`` by a fresh path with ``length`` edges.

        Returns the ``length - 1`` new internal vertices, ordered from ``u``
        towards ``v``.  ``length == 1`` adds the single edge ``{u, v}``.
        """
        self._check_open()
        if length < 1:
            raise GraphError(f"path length must be positive, got {length}")
        if u == v:
            raise GraphError("path endpoints must differ")
        self._check_vertex(u)
        self._check_vertex(v)
        inner = self.add_vertices(length - 1)
        chain = [u, *inner, v]
        for a, b in zip(chain, chain[1:]):
            self.add_edge(a, b)
        return inner

    def seal(self) -> "Graph":
        if self._sealed is None:
            self._sealed = tuple(tuple(sorted(nb)) for nb in self._adj)
        return self

    # -- queries -----------------------------------------------------------

    def _check_vertex(self, v: int):
        if not 0 <= v < len(self._adj):
            raise GraphError(f"no vertex {v}")

    @property
    def sealed(self) -> bool:
        return self._sealed is not None

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        state = "sealed" if self.sealed else "open"
        return f"Graph(n={self.vertex_count}, m={self.edge_count}, {state})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._sealed is None:
            return tuple(sorted(self._adj[v]))
        return self._sealed[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(len(self._adj)) for v in self.neighbors(u) if u < v]

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        self._require_sealed()
        return self._sealed

    def _require_sealed(self):
        if self._sealed is None:
            raise GraphError("distance queries need a sealed graph")

    def csr(self) -> csr_matrix:
        """Adjacency as a scipy CSR matrix (built once, cached)."""
        self._require_sealed()
        if self._csr is None:
            n = self.vertex_count
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum([len(nb) for nb in self._sealed], out=indptr[1:])
            indices = np.fromiter(
                (w for nb in self._sealed for w in nb), dtype=np.int32, count=int(indptr[-1]))
            data = np.ones(len(indices), dtype=np.int8)
            self._csr = csr_matrix((data, indices, indptr), shape=(n, n))
        return self._csr


def add_path(g: Graph, u: int, v: int, length: int) -> list[int]:
    return g.add_path(u, v, length)


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Exact unweighted distances from ``source``; unreachable vertices get None."""
    adj = g.adjacency()
    g._check_vertex(source)
    dist: list[Optional[int]] = [UNREACHABLE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] is None:
                dist[w] = dv
                queue.append(w)
    return dist


def distance_matrix(g: Graph, sources: Optional[Sequence[int]] = None) -> np.ndarray:
    """Distances from each source (rows) to every vertex, as int32.

    Unreachable entries are ``UNREACHABLE_INT``.  ``sources=None`` means all
    vertices.  Computed with scipy's compiled shortest-path routine; agrees
    with :func:`bfs_distances` entry for entry.
    """
    g._require_sealed()
    n = g.vertex_count
    if sources is None:
        sources = range(n)
    sources = list(sources)
    if not sources:
        return np.zeros((0, n), dtype=np.int32)
    if n == 0:
        return np.zeros((len(sources), 0), dtype=np.int32)
    raw = shortest_path(g.csr(), method="D", directed=False, unweighted=True, indices=sources)
    raw = np.atleast_2d(raw)
    out = np.full(raw.shape, UNREACHABLE_INT, dtype=np.int32)
    finite = np.isfinite(raw)
    out[finite] = raw[finite].astype(np.int32)
    return out


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def degree_profile(g: Graph) -> dict[int, int]:
    """Histogram degree -> number of vertices with that degree."""
    return dict(sorted(Counter(g.degree(v) for v in range(g.vertex_count)).items()))


def twin_leaf_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs of distinct degree-one vertices hanging off the same neighbor."""
    leaves_at: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        if g.degree(v) == 1:
            leaves_at.setdefault(g.neighbors(v)[0], []).append(v)
    pairs = []
    for leaves in leaves_at.values():
        leaves.sort()
        pairs.extend((a, b) for i, a in enumerate(leaves) for b in leaves[i + 1:])
    return sorted(pairs)


# -- text format -------------------------------------------------------------

def read_edge_list(f: TextIO) -> Graph:
    """Parse ``p <n> <m>`` / ``e <u> <v>`` (1-indexed) into a sealed graph.

    Lines starting with ``c`` are comments.  ``p edge <n> <m>`` is accepted too.
    """
    n = m = None
    edges = []
    for lineno, line in enumerate(f, 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            nums = [t for t in tokens[1:] if t != "edge"]
            if len(nums) != 2 or n is not None:
                raise GraphError(f"line {lineno}: bad header {line.strip()!r}")
            n, m = int(nums[0]), int(nums[1])
        elif tokens[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(tokens) != 3:
                raise GraphError(f"line {lineno}: bad edge {line.strip()!r}")
            edges.append((int(tokens[1]) - 1, int(tokens[2]) - 1))
        else:
            raise GraphError(f"line {lineno}: unknown line {line.strip()!r}")
    if n is None:
        raise GraphError("missing header line")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph, f: TextIO) -> None:
    edges = g.edges()
    f.write(f"p {g.vertex_count} {len(edges)}\n")
    for u, v in edges:
        f.write(f"e {u + 1} {v + 1}\n")


def load_graph(path) -> Graph:
    with open(path) as f:
        return read_edge_list(f)


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as f:
        write_edge_list(g, f)
