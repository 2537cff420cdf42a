"""Resolving sets and Metric Dimension solvers.

A landmark ``v`` separates ``{u, w}`` when ``dist(v, u) != dist(v, w)``.
Unreachable distances compare equal to each other and unequal to every finite
distance, so a landmark never separates two vertices it cannot reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import Graph, bfs_distances, distance_matrix
from .setcover import min_cover

Pair = tuple[int, int]


def separates(g: Graph, v: int, u: int, w: int) -> bool:
    if u == w:
        raise ValueError("a pair needs two distinct vertices")
    row = bfs_distances(g, v)
    return row[u] != row[w]


def _classes(rows: np.ndarray) -> np.ndarray:
    """Class id per vertex; equal ids iff equal distance vectors (columns of rows)."""
    n = rows.shape[1]
    if rows.shape[0] == 0:
        return np.zeros(n, dtype=np.int64)
    _, inverse = np.unique(rows.T, axis=0, return_inverse=True)
    return inverse.reshape(-1)


def _pairs_within(classes: np.ndarray) -> list[Pair]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(classes.tolist()):
        groups.setdefault(c, []).append(v)
    pairs = []
    for members in groups.values():
        if len(members) > 1:
            pairs.extend(combinations(members, 2))
    pairs.sort()
    return pairs


def unresolved_pairs(g: Graph, landmarks: Iterable[int]) -> list[Pair]:
    """All pairs ``(u, w)``, ``u < w``, that no landmark separates (one BFS per landmark)."""
    landmarks = sorted(set(landmarks))
    return _pairs_within(_classes(distance_matrix(g, landmarks)))


def unresolved_pairs_from_rows(rows: np.ndarray) -> list[Pair]:
    """Same as :func:`unresolved_pairs` given precomputed landmark distance rows."""
    return _pairs_within(_classes(rows))


def is_resolving_set(g: Graph, landmarks: Iterable[int]) -> bool:
    landmarks = sorted(set(landmarks))
    if g.vertex_count < 2:
        return True
    classes = _classes(distance_matrix(g, landmarks))
    return len(np.unique(classes)) == g.vertex_count


@dataclass
class SeparationMatrix:
    """Which candidate separates which pair.

    ``masks[c]`` is a bitmask over ``pairs``: bit ``p`` is set iff
    ``candidates[c]`` separates ``pairs[p]``.
    """

    pairs: list[Pair]
    candidates: list[int]
    masks: list[int]

    def cell(self, p: int, c: int) -> bool:
        return bool(self.masks[c] >> p & 1)

    @classmethod
    def build(cls, g: Graph, pairs: Sequence[Pair], candidates: Sequence[int]) -> "SeparationMatrix":
        """Two BFS runs per pair; by symmetry ``dist(c, u) = dist(u, c)``."""
        pairs = list(pairs)
        candidates = list(candidates)
        if not pairs:
            return cls(pairs, candidates, [0] * len(candidates))
        ends = sorted({v for p in pairs for v in p})
        row_of = {v: k for k, v in enumerate(ends)}
        rows = distance_matrix(g, ends)
        cand = np.asarray(candidates, dtype=np.int64)
        sep = np.empty((len(pairs), len(candidates)), dtype=bool)
        for p, (u, w) in enumerate(pairs):
            sep[p] = rows[row_of[u], cand] != rows[row_of[w], cand]
        return cls(pairs, candidates, _column_masks(sep))


def _column_masks(sep: np.ndarray) -> list[int]:
    """Bool matrix (rows = pairs) to one little-endian int bitmask per column."""
    packed = np.packbits(sep, axis=0, bitorder="little")
    return [int.from_bytes(packed[:, c].tobytes(), "little") for c in range(sep.shape[1])]


def exact_md_naive(g: Graph, k_max: int) -> tuple[Optional[int], Optional[set[int]]]:
    """Smallest resolving set of size at most ``k_max`` by subset enumeration.

    Sizes are tried in increasing order and subsets in lexicographic order, so
    the witness is the lexicographically smallest metric basis.  Returns
    ``(None, None)`` when no resolving set of size ``<= k_max`` exists.
    """
    n = g.vertex_count
    dist = distance_matrix(g)
    for k in range(0, min(k_max, n) + 1):
        for combo in combinations(range(n), k):
            if n < 2:
                return k, set(combo)
            vecs = dist[list(combo)].T if k else np.zeros((n, 0), dtype=np.int32)
            if len({tuple(r) for r in vecs.tolist()}) == n:
                return k, set(combo)
    return None, None


def exact_md_cover(
    g: Graph,
    forced: Iterable[int] = (),
    candidates: Optional[Iterable[int]] = None,
    budget: Optional[int] = None,
) -> Optional[tuple[int, set[int]]]:
    """Minimum resolving superset of ``forced`` drawn from ``forced`` and ``candidates``.

    Only pairs left unresolved by ``forced`` need to be covered; the search
    is a set cover over their :class:`SeparationMatrix`.  ``candidates=None``
    means all vertices.  Returns ``(size, witness)`` with the forced
    landmarks included, or None when ``budget`` is too small or no such
    set exists.
    """
    forced = set(forced)
    pool = range(g.vertex_count) if candidates is None else candidates
    pool = sorted(set(pool) - forced)
    if budget is not None and budget < len(forced):
        return None
    todo = unresolved_pairs(g, forced)
    if not todo:
        return len(forced), forced
    matrix = SeparationMatrix.build(g, todo, pool)
    # identical columns collapse onto their lowest vertex id
    first: dict[int, int] = {}
    for c, mask in enumerate(matrix.masks):
        if mask and mask not in first:
            first[mask] = c
    masks = list(first)
    kept = _undominated(masks)
    columns = [masks[i] for i in kept]
    owners = [matrix.candidates[first[masks[i]]] for i in kept]
    cap = None if budget is None else budget - len(forced)
    cover = min_cover(columns, (1 << len(todo)) - 1, max_size=cap)
    if cover is None:
        return None
    witness = forced | {owners[c] for c in cover}
    return len(witness), witness


def _undominated(masks: list[int]) -> list[int]:
    """Indices of masks that are not a proper subset of another mask, in input order."""
    order = sorted(range(len(masks)), key=lambda i: -masks[i].bit_count())
    kept: list[int] = []
    for i in order:
        m = masks[i]
        if not any(m & ~masks[j] == 0 for j in kept):
            kept.append(i)
    kept.sort()
    return kept


def greedy_resolving_set(g: Graph) -> set[int]:
    """Pick the vertex separating the most unresolved pairs until none remain.

    Ties go to the smallest vertex id.  Needs all-pairs distances, so memory
    is quadratic in the vertex count.
    """
    n = g.vertex_count
    if n < 2:
        return set()
    dist = distance_matrix(g)
    classes = np.zeros(n, dtype=np.int64)
    chosen: set[int] = set()
    while len(np.unique(classes)) < n:
        best, best_gain = -1, 0
        base = _pair_count(classes)
        for v in range(n):
            if v in chosen:
                continue
            refined = _classes(np.vstack([classes, dist[v]]))
            gain = base - _pair_count(refined)
            if gain > best_gain:
                best, best_gain = v, gain
        if best < 0:  # pragma: no cover - every vertex separates its own pairs
            break
        chosen.add(best)
        classes = _classes(np.vstack([classes, dist[best]]))
    return chosen


def _pair_count(classes: np.ndarray) -> int:
    counts = np.bincount(classes)
    return int((counts * (counts - 1) // 2).sum())
