"""Exact minimum set cover by branch and bound over bitmask columns.

Both the dominating-set solver and the resolving-set / red-blue solvers are
set-cover problems, and they all run through :func:`min_cover`.

Columns are Python ints used as bitsets over the elements ``0 .. m-1``.  The
column position is the tie-break key: among equally good choices the
lower-indexed column wins, which makes every result deterministic.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _popcount(x: int) -> int:
    return x.bit_count()


def _elements(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_cover(columns: Sequence[int], universe: int) -> Optional[list[int]]:
    """Repeatedly take the column covering the most uncovered elements.

    Ties go to the lowest column index.  Returns None when some element is in
    no column.
    """
    uncovered = universe
    chosen = []
    while uncovered:
        best, best_gain = -1, 0
        for c, col in enumerate(columns):
            gain = _popcount(col & uncovered)
            if gain > best_gain:
                best, best_gain = c, gain
        if best < 0:
            return None
        chosen.append(best)
        uncovered &= ~columns[best]
    return sorted(chosen)


class _Search:
    def __init__(self, columns: Sequence[int], universe: int, allowed: Sequence[int]):
        self.columns = columns
        self.allowed = list(allowed)
        self.covers: dict[int, list[int]] = {}
        for e in _elements(universe):
            bit = 1 << e
            self.covers[e] = [c for c in self.allowed if columns[c] & bit]
        self.best: Optional[list[int]] = None
        self.bound = 0
        self.nodes = 0

    def lower_bound(self, uncovered: int) -> int:
        """max(disjoint packing bound, fractional bound) on columns still needed."""
        cols = self.columns
        gains = {}
        frac = 0.0
        for e in _elements(uncovered):
            top = 0
            for c in self.covers[e]:
                g = gains.get(c)
                if g is None:
                    g = gains[c] = _popcount(cols[c] & uncovered)
                if g > top:
                    top = g
            if top == 0:
                return 1 << 30
            frac += 1.0 / top
        # packing: elements whose covering columns are pairwise disjoint
        packed = 0
        used = set()
        for e in sorted(_elements(uncovered), key=lambda e: len(self.covers[e])):
            cs = self.covers[e]
            if used.isdisjoint(cs):
                packed += 1
                used.update(cs)
        return max(packed, int(frac - 1e-9) + (frac - int(frac) > 1e-9))

    def run(self, uncovered: int, chosen: list[int]):
        """Depth-first search for covers smaller than ``self.bound``."""
        self.nodes += 1
        if not uncovered:
            if len(chosen) < self.bound:
                self.best = sorted(chosen)
                self.bound = len(chosen)
            return
        if len(chosen) + self.lower_bound(uncovered) >= self.bound:
            return
        # most constrained element first, then lowest element index
        target = min(_elements(uncovered), key=lambda e: (len(self.covers[e]), e))
        cols = self.columns
        order = sorted(self.covers[target], key=lambda c: (-_popcount(cols[c] & uncovered), c))
        for c in order:
            chosen.append(c)
            self.run(uncovered & ~cols[c], chosen)
            chosen.pop()
            if len(chosen) + 1 >= self.bound:
                return


def _search(columns, universe, allowed, limit) -> Optional[list[int]]:
    """Minimum cover using only ``allowed`` columns, of size < ``limit``."""
    s = _Search(columns, universe, allowed)
    s.bound = limit
    s.run(universe, [])
    return s.best


def min_cover(
    columns: Sequence[int],
    universe: int,
    *,
    max_size: Optional[int] = None,
    lexicographic: bool = False,
) -> Optional[list[int]]:
    """Minimum-cardinality set of column indices whose union covers ``universe``.

    Returns the sorted column indices, or None if no cover exists or the
    optimum exceeds ``max_size``.  With ``lexicographic=True`` the returned
    cover is the lexicographically smallest one among all minimum covers
    (compared as sorted index tuples).
    """
    columns = list(columns)
    if not universe:
        return []
    union = 0
    for col in columns:
        union |= col
    if universe & ~union:
        return None
    upper = greedy_cover(columns, universe)
    cap = len(upper) if max_size is None else min(len(upper), max_size)
    everything = range(len(columns))
    best = _search(columns, universe, everything, cap + 1)
    if best is None:
        return None
    if not lexicographic:
        return best
    return _lex_smallest(columns, universe, len(best))


def _lex_smallest(columns, universe, size) -> list[int]:
    # Fix positions left to right: the next member is the smallest column that
    # still completes to a cover of the optimal size with larger columns only.
    chosen: list[int] = []
    uncovered = universe
    while len(chosen) < size:
        last = chosen[-1] if chosen else -1
        remaining = size - len(chosen)
        for c in range(last + 1, len(columns)):
            rest = uncovered & ~columns[c]
            if remaining == 1:
                ok = not rest
            else:
                ok = not rest or _search(columns, rest, range(c + 1, len(columns)), remaining) is not None
            if ok:
                chosen.append(c)
                uncovered = rest
                break
        else:  # pragma: no cover - size came from an actual cover
            raise AssertionError("lexicographic completion failed")
        if not uncovered:
            break
    return chosen
