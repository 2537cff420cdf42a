"""Metric Dimension as Red-Blue Dominating Set.

Red vertices are copies of the graph's vertices.  There is one blue vertex
per unordered pair ``{u, w}``, adjacent to every red ``v`` that separates
``u`` and ``w``.  A red set dominates all blue vertices exactly when the
matching vertex set is resolving, so the two problems have the same optimum
and the same witnesses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .graph import Graph, distance_matrix
from .mdim import _column_masks
from .setcover import min_cover

Pair = tuple[int, int]


class InfeasibleError(ValueError):
    """Some blue vertex has no red neighbor."""


@dataclass
class RbdsInstance:
    """``red_masks[v]`` has bit ``p`` set iff red ``v`` is adjacent to ``blue[p]``."""

    red: list[int]
    blue: list[Pair]
    red_masks: list[int]
    budget: int

    def has_edge(self, red: int, blue: int) -> bool:
        return bool(self.red_masks[red] >> blue & 1)

    def edges(self) -> list[tuple[int, int]]:
        """(red, blue index) pairs in row-major order."""
        return [(v, p) for v in self.red for p in range(len(self.blue)) if self.has_edge(v, p)]

    def blue_neighbors(self, p: int) -> list[int]:
        return [v for v in self.red if self.has_edge(v, p)]

    def is_solution(self, members) -> bool:
        covered = 0
        for v in members:
            covered |= self.red_masks[v]
        return covered == (1 << len(self.blue)) - 1

    def to_json(self) -> dict:
        return {
            "red": self.red,
            "blue": [list(p) for p in self.blue],
            "edges": [[v, p] for v, p in self.edges()],
            "budget": self.budget,
        }

    def dump(self, f) -> None:
        json.dump(self.to_json(), f)
        f.write("\n")


def md_to_rbds(g: Graph, k: int) -> RbdsInstance:
    n = g.vertex_count
    blue = list(combinations(range(n), 2))
    if not blue:
        return RbdsInstance(list(range(n)), [], [0] * n, k)
    dist = distance_matrix(g)
    us = np.fromiter((u for u, _ in blue), dtype=np.int64, count=len(blue))
    ws = np.fromiter((w for _, w in blue), dtype=np.int64, count=len(blue))
    # sep[p, v]: red v separates blue pair p
    sep = dist[:, us].T != dist[:, ws].T
    return RbdsInstance(list(range(n)), blue, _column_masks(sep), k)


def exact_min_rbds(inst: RbdsInstance) -> tuple[int, set[int]]:
    """Minimum red set dominating every blue vertex.

    The witness is the lexicographically smallest optimum.  Raises
    InfeasibleError when some blue vertex has no red neighbor.
    """
    universe = (1 << len(inst.blue)) - 1
    union = 0
    for m in inst.red_masks:
        union |= m
    if universe & ~union:
        p = (universe & ~union).bit_length() - 1
        raise InfeasibleError(f"blue vertex {inst.blue[p]} has no red neighbor")
    cover = min_cover(inst.red_masks, universe, lexicographic=True)
    assert cover is not None
    return len(cover), {inst.red[c] for c in cover}


def decide_rbds(inst: RbdsInstance) -> Optional[set[int]]:
    """A solution of size at most the budget, or None."""
    universe = (1 << len(inst.blue)) - 1
    cover = min_cover(inst.red_masks, universe, max_size=inst.budget)
    return None if cover is None else {inst.red[c] for c in cover}
