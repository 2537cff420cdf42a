"""Bipartite Dominating Set instances, normalization and an exact solver.

Vertex ``k`` (0-based) of an instance is ``v_{k+1}`` in one-based notation;
``V1`` is ``0 .. s-1`` and ``V2`` is ``s .. n-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph
from .setcover import min_cover

DEFAULT_CAP = 16

# Minimum index gap j - i required between the endpoints of every edge.
MIN_GAP = 3


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class BipartiteInstance:
    """A bipartite graph with sides ``V1 = 0..s-1``, ``V2 = s..n-1`` and budget ``h``.

    ``origin[k]`` is the index vertex ``k`` had in the instance this one was
    derived from (None for padding vertices added by :func:`normalize`).
    """

    graph: Graph
    s: int
    h: int
    names: Optional[tuple[str, ...]] = None
    origin: Optional[tuple[Optional[int], ...]] = None

    def __post_init__(self):
        if not self.graph.sealed:
            raise InstanceError("instance graph must be sealed")
        n = self.graph.vertex_count
        if not 0 <= self.s <= n:
            raise InstanceError(f"part size {self.s} out of range for n={n}")
        if self.h < 1:
            raise InstanceError(f"budget must be positive, got {self.h}")
        if self.names is not None and len(self.names) != n:
            raise InstanceError("one name per vertex required")
        for u, v in self.graph.edges():
            if (u < self.s) == (v < self.s):
                raise InstanceError(f"edge {{{u}, {v}}} does not cross the bipartition")

    @classmethod
    def from_edges(cls, s: int, t: int, edges: Iterable[tuple[int, int]], h: int = 1, names=None):
        """Instance with ``s`` vertices in V1 and ``t`` in V2; edges use 0-based ids."""
        g = Graph.from_edges(s + t, edges)
        return cls(g, s, h, tuple(names) if names is not None else None)

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def part1(self) -> range:
        return range(self.s)

    @property
    def part2(self) -> range:
        return range(self.s, self.n)

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def is_normalized(self) -> bool:
        return all(v - u >= MIN_GAP for u, v in self.edges())

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else f"v{v + 1}"

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> dict:
        names = [self.name(v) for v in range(self.n)]
        return {
            "v1": names[: self.s],
            "v2": names[self.s:],
            "edges": [[names[u], names[v]] for u, v in self.edges()],
            "h": self.h,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BipartiteInstance":
        try:
            v1, v2, raw_edges, h = data["v1"], data["v2"], data["edges"], data["h"]
        except KeyError as exc:
            raise InstanceError(f"missing key {exc}") from None
        names = [str(x) for x in [*v1, *v2]]
        index = {}
        for k, name in enumerate(names):
            if name in index:
                raise InstanceError(f"duplicate vertex name {name!r}")
            index[name] = k
        edges = []
        for a, b in raw_edges:
            try:
                edges.append((index[str(a)], index[str(b)]))
            except KeyError as exc:
                raise InstanceError(f"unknown vertex {exc}") from None
        try:
            return cls.from_edges(len(v1), len(v2), edges, int(h), names)
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc


def load_instance(path) -> BipartiteInstance:
    with open(path) as f:
        return BipartiteInstance.from_json(json.load(f))


def save_instance(inst: BipartiteInstance, path) -> None:
    with open(path, "w") as f:
        json.dump(inst.to_json(), f, indent=1)
        f.write("\n")


def closed_neighborhoods(g: Graph) -> list[int]:
    """N[v] of every vertex as a bitmask."""
    return [(1 << v) | sum(1 << w for w in g.neighbors(v)) for v in range(g.vertex_count)]


def is_dominating_set(inst: BipartiteInstance, members: Iterable[int]) -> bool:
    """True iff every vertex has a closed-neighborhood member in ``members``."""
    chosen = 0
    for v in members:
        if not 0 <= v < inst.n:
            raise InstanceError(f"no vertex {v}")
        chosen |= 1 << v
    return all(nb & chosen for nb in closed_neighborhoods(inst.graph))


def normalize(inst: BipartiteInstance) -> BipartiteInstance:
    """Pad with two isolated vertices so that every edge ``{v_i, v_j}`` has ``j >= i+3``.

    The padding vertices get indices ``s, s+1`` (one-based ``v_{s+1}``,
    ``v_{s+2}``); the old V2 shifts up by two and the budget grows by two.
    Instances that already satisfy the gap pass through unchanged.
    """
    if inst.is_normalized():
        return inst
    s, n = inst.s, inst.n

    def shift(v: int) -> int:
        return v if v < s else v + 2

    edges = [(shift(u), shift(v)) for u, v in inst.edges()]
    names = None
    if inst.names is not None:
        taken = set(inst.names)
        pads = []
        k = 1
        while len(pads) < 2:
            cand = f"_pad{k}"
            if cand not in taken:
                pads.append(cand)
            k += 1
        names = (*inst.names[:s], *pads, *inst.names[s:])
    origin = (*range(s), None, None, *range(s, n))
    g = Graph.from_edges(n + 2, edges)
    # the padding vertices are isolated and may sit on either side; counting
    # them in V1 keeps V2 = s+2 .. n+1 contiguous
    return BipartiteInstance(g, s + 2, inst.h + 2, names, origin)


def denormalize(normalized: BipartiteInstance, members: Iterable[int]) -> set[int]:
    """Map a vertex set of a normalized instance back to its source instance.

    Padding vertices are dropped.
    """
    if normalized.origin is None:
        return set(members)
    return {normalized.origin[v] for v in members if normalized.origin[v] is not None}


def exact_min_dominating_set(inst: BipartiteInstance, cap: int = DEFAULT_CAP) -> tuple[int, set[int]]:
    """Minimum dominating set size and its lexicographically smallest witness.

    Branch and bound over closed neighborhoods (see :mod:`metricdim.setcover`);
    raises InstanceError if the instance has more than ``cap`` vertices.
    """
    if inst.n > cap:
        raise InstanceError(f"instance has {inst.n} vertices, solver cap is {cap}")
    if inst.n == 0:
        return 0, set()
    # column v covers N[v]; element w is covered by the columns in N[w]
    columns = closed_neighborhoods(inst.graph)
    cover = min_cover(columns, (1 << inst.n) - 1, lexicographic=True)
    assert cover is not None  # every vertex dominates itself
    return len(cover), set(cover)


def all_min_dominating_sets(inst: BipartiteInstance, cap: int = DEFAULT_CAP) -> list[frozenset[int]]:
    """Every minimum dominating set, in lexicographic order (brute force)."""
    from itertools import combinations

    size, _ = exact_min_dominating_set(inst, cap)
    nbs = closed_neighborhoods(inst.graph)
    out = []
    for combo in combinations(range(inst.n), size):
        chosen = sum(1 << v for v in combo)
        if all(nb & chosen for nb in nbs):
            out.append(frozenset(combo))
    return out
