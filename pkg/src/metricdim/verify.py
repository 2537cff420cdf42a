"""Executable checks of the reduction's distance and separation properties.

Each ``check_*`` function inspects one constructed instance and returns a
:class:`CheckResult`; failures carry the first counterexample as labeled
vertices with their distances.  :func:`verify_instance` runs them all and
:func:`run_suite` sweeps the exhaustive and seeded-random instance families.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import generate
from .bds import (
    BipartiteInstance,
    all_min_dominating_sets,
    exact_min_dominating_set,
    is_dominating_set,
    normalize,
)
from .graph import Graph, degree_profile, distance_matrix, is_connected, twin_leaf_pairs
from .mdim import exact_md_cover, unresolved_pairs_from_rows
from .reduction import (
    CORNERS,
    L,
    ReductionInstance,
    build_reduction,
    closed_form_distance,
    covered_pairs,
    edge_census,
    map_basis_to_domset,
    map_domset_to_basis,
    vertex_census,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass
class VerificationReport:
    name: str
    n: int
    y: int
    edges: int
    vertices: int
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timing: bool = False) -> str:
        """One JSON line; wall time is left out unless asked for, so output is reproducible."""
        data = asdict(self)
        if not timing:
            del data["seconds"]
        data["ok"] = self.ok
        return json.dumps(data, sort_keys=True)


class _Rows:
    """Lazily computed BFS rows of one reduction, cached by vertex."""

    def __init__(self, R: ReductionInstance):
        self.R = R
        self._rows: dict[int, np.ndarray] = {}

    def prefetch(self, vertices: Iterable[int]):
        todo = sorted({v for v in vertices if v not in self._rows})
        if todo:
            for v, row in zip(todo, distance_matrix(self.R.gprime, todo)):
                self._rows[v] = row

    def __getitem__(self, v: int) -> np.ndarray:
        if v not in self._rows:
            self.prefetch([v])
        return self._rows[v]

    def dist(self, a, b) -> int:
        return int(self[a][b])


def _describe(R: ReductionInstance, *vertices: int) -> list[str]:
    return [str(R.label(v)) for v in vertices]


def expected_census_pairs(R: ReductionInstance) -> set[tuple[int, int]]:
    return {
        tuple(sorted((R.index[L("Left", i, j)], R.index[L("Right", i, j)])))
        for i in range(1, R.n + 1)
        for j in range(1, R.n + 1)
    }


def sibling_pairs(R: ReductionInstance) -> set[tuple[int, int]]:
    """Edge-gadget pairs the four leaves cannot tell apart beyond the l/r pairs.

    For edges ``(i, j)`` and ``(i, j2)``, ``j < j2``, ``j2 - j = 2x``: the BL
    vertex of ``(i, j)`` and the TL vertex of ``(i, j2)`` at distance ``x``
    from their ``w`` vertices.  Mirrored: the BR vertex of ``(i, j)`` and the
    TR vertex of ``(i2, j)``, ``i2 - i = 2x``.
    """
    y = R.y
    edges = R.source_edges()
    out = set()
    for (i, j), (i2, j2) in ((e, f) for e in edges for f in edges):
        if i == i2 and j < j2 and (j2 - j) % 2 == 0:
            x = (j2 - j) // 2
            a, b = R.index[L("EdgePart", i, j, "BL", y - x)], R.index[L("EdgePart", i, j2, "TL", y - x)]
            out.add((min(a, b), max(a, b)))
        if j == j2 and i < i2 and (i2 - i) % 2 == 0:
            x = (i2 - i) // 2
            a, b = R.index[L("EdgePart", i, j, "BR", y - x)], R.index[L("EdgePart", i2, j, "TR", y - x)]
            out.add((min(a, b), max(a, b)))
    return out


def _pair_evidence(R, rows, forced, pair):
    a, b = pair
    return {
        "pair": _describe(R, a, b),
        "distances": {str(R.label(f)): [rows.dist(f, a), rows.dist(f, b)] for f in forced},
    }


# -- checks ---------------------------------------------------------------------

def check_structure(R: ReductionInstance) -> CheckResult:
    g = R.gprime
    edges = R.source_edges()
    profile = degree_profile(g)
    facts = {
        "max_degree": max(profile),
        "connected": is_connected(g),
        "vertices": g.vertex_count,
        "vertex_census": vertex_census(R.n, R.y, edges),
        "edges": g.edge_count,
        "edge_census": edge_census(R.n, R.y, edges),
    }
    ok = (facts["max_degree"] == 3 and facts["connected"]
          and facts["vertices"] == facts["vertex_census"] and facts["edges"] == facts["edge_census"])
    return CheckResult("structure", ok, 1, None if ok else facts)


def _forced_unresolved(R: ReductionInstance, rows: _Rows) -> set[tuple[int, int]]:
    forced = R.forced_landmarks()
    stack = np.vstack([rows[f] for f in forced])
    return set(unresolved_pairs_from_rows(stack))


def check_forced_landmark_census(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """The four leaves leave exactly the pairs {Left(i, j), Right(i, j)} unresolved."""
    rows = rows or _Rows(R)
    got = _forced_unresolved(R, rows)
    want = expected_census_pairs(R)
    ok = got == want
    cex = None
    if not ok:
        extra = sorted(got - want)
        missing = sorted(want - got)
        first = extra[0] if extra else missing[0]
        cex = _pair_evidence(R, rows, R.forced_landmarks(), first)
        cex.update(unresolved=len(got), expected=len(want), extra=len(extra), missing=len(missing))
    return CheckResult("forced_landmark_census", ok, len(want), cex)


def check_census_excess(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """Anything left unresolved besides the l/r pairs is one of the sibling pairs."""
    rows = rows or _Rows(R)
    got = _forced_unresolved(R, rows)
    want = expected_census_pairs(R) | sibling_pairs(R)
    ok = got == want
    cex = None
    if not ok:
        first = sorted(got ^ want)[0]
        cex = _pair_evidence(R, rows, R.forced_landmarks(), first)
        cex["unexpected"] = first in got
    return CheckResult("census_modulo_sibling_pairs", ok, len(got), cex)


def check_single_gadget_landmark(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """Adding Right(i, 1) to the four leaves resolves every pair {Left(i, j), Right(i, j)}."""
    rows = rows or _Rows(R)
    checked = 0
    for i in range(1, R.n + 1):
        r = R.index[L("Right", i, 1)]
        for j in range(1, R.n + 1):
            a, b = R.index[L("Left", i, j)], R.index[L("Right", i, j)]
            checked += 1
            if rows.dist(r, a) == rows.dist(r, b):
                return CheckResult("own_gadget_separation", False, checked,
                                   {"landmark": str(R.label(r)), "pair": _describe(R, a, b)})
    return CheckResult("own_gadget_separation", True, checked)


def check_closed_form(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """BFS equals the closed-form distance on every covered label pair."""
    rows = rows or _Rows(R)
    pairs = covered_pairs(R)
    rows.prefetch(R.vertex(b) for _, b in pairs)
    for a, b in pairs:
        va, vb = R.vertex(a), R.vertex(b)
        bfs = rows.dist(vb, va)
        formula = closed_form_distance(R, a, b)
        if formula is None or bfs != formula:
            return CheckResult("closed_form", False, len(pairs),
                               {"pair": [str(a), str(b)], "bfs": bfs, "formula": formula})
    return CheckResult("closed_form", True, len(pairs))


def check_gadget_lengths(R: ReductionInstance) -> CheckResult:
    """Inside their gadgets: anchors are n+1 apart, edge-gadget paths have (j-i+3/2)y edges."""
    n, y = R.n, R.y
    checked = 0
    for i in range(1, n + 1):
        cycle = [R.index[L("AnchorTop", i)], R.index[L("AnchorBottom", i)]]
        cycle += [R.index[L(s, i, j)] for s in ("Left", "Right") for j in range(1, n + 1)]
        d = _induced_distance(R.gprime, cycle, cycle[0], cycle[1])
        checked += 1
        if d != n + 1:
            return CheckResult("gadget_lengths", False, checked,
                               {"gadget": i, "anchor_distance": d, "expected": n + 1})
    for i, j in R.source_edges():
        ends = [R.index[L("Right", i, j)], R.index[L("Right", j, i)]]
        body = [v for v, lab in enumerate(R.labels)
                if lab.kind in ("EdgePart", "EdgeW") and lab.args[:2] == (i, j)
                and (lab.kind == "EdgeW" or lab.args[2] in ("BL", "M", "BR"))]
        d = _induced_distance(R.gprime, ends + body, ends[0], ends[1])
        checked += 1
        want = (j - i) * y + 3 * y // 2
        if d != want:
            return CheckResult("gadget_lengths", False, checked,
                               {"edge": [i, j], "path_length": d, "expected": want})
    return CheckResult("gadget_lengths", True, checked)


def _induced_distance(g: Graph, vertices, a, b) -> Optional[int]:
    keep = {v: k for k, v in enumerate(vertices)}
    sub = Graph(len(vertices))
    for v, k in keep.items():
        for w in g.neighbors(v):
            if w in keep and k < keep[w]:
                sub.add_edge(k, keep[w])
    row = distance_matrix(sub.seal(), [keep[a]])[0]
    d = int(row[keep[b]])
    return None if d < 0 else d


def check_edge_gadget_distances(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """Attachment detours, traversal cost and entry discipline, all by BFS."""
    rows = rows or _Rows(R)
    y = R.y
    tl, tr, bl, br = R.forced_landmarks()
    checked = 0
    for i, j in R.source_edges():
        a1, a2 = R.vertex(L("Attach", i, j, 1)), R.vertex(L("Attach", i, j, 2))
        r_ij, r_ji = R.index[L("Right", i, j)], R.index[L("Right", j, i)]
        w1, w2 = R.index[L("EdgeW", i, j, 1)], R.index[L("EdgeW", i, j, 2)]
        facts = []
        facts.append(("attach1_to_right", rows.dist(a1, r_ij), y + 2 * j))
        facts.append(("attach2_to_right", rows.dist(a2, r_ji), y + 2 * i))
        d = rows.dist(r_ij, r_ji)
        facts.append(("traversal_upper", d <= (j - i) * y + 3 * y // 2, True))
        facts.append(("traversal_lower", d > (j - i + 1) * y, True))
        for leaf in (tl, bl):
            facts.append((f"entry_w1_from_{R.label(leaf)}", rows.dist(leaf, w1),
                          min(rows.dist(leaf, a1), rows.dist(leaf, r_ij)) + y))
        for leaf in (tr, br):
            facts.append((f"entry_w2_from_{R.label(leaf)}", rows.dist(leaf, w2),
                          min(rows.dist(leaf, a2), rows.dist(leaf, r_ji)) + y))
        for what, got, want in facts:
            checked += 1
            if got != want:
                return CheckResult("edge_gadget_distances", False, checked,
                                   {"edge": [i, j], "fact": what, "got": got, "expected": want})
    return CheckResult("edge_gadget_distances", True, checked)


def check_adjacent_gadget_separation(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """Right(a, 1) separates the l/r pairs of gadget i iff {v_i, v_a} is a source edge.

    For an edge the shortest route runs through the edge gadget and has
    length ``(i-1) + |a-j| + (|a-i| + 3/2) y`` to ``Right(i, j)``.
    """
    rows = rows or _Rows(R)
    n, y = R.n, R.y
    adjacent = {(i, a) for i, j in R.source_edges() for i, a in ((i, j), (j, i))}
    rows.prefetch(R.index[L("Right", a, 1)] for a in range(1, n + 1))
    checked = 0
    for i in range(1, n + 1):
        for a in range(1, n + 1):
            if a == i:
                continue
            land = R.index[L("Right", a, 1)]
            for j in range(1, n + 1):
                lv, rv = R.index[L("Left", i, j)], R.index[L("Right", i, j)]
                dl, dr = rows.dist(land, lv), rows.dist(land, rv)
                checked += 1
                if (i, a) in adjacent:
                    want = (i - 1) + abs(a - j) + abs(a - i) * y + 3 * y // 2
                    bad = dl == dr or dr != want
                else:
                    want = None
                    bad = dl != dr
                if bad:
                    return CheckResult("adjacent_gadget_separation", False, checked, {
                        "landmark": str(R.label(land)), "pair": _describe(R, lv, rv),
                        "distances": [dl, dr], "adjacent": (i, a) in adjacent, "expected_right": want})
    return CheckResult("adjacent_gadget_separation", True, checked)


def check_twin_leaves(R: ReductionInstance, rows: Optional[_Rows] = None) -> CheckResult:
    """Exactly the four P3 leaf pairs are twins, and only their own members separate them."""
    rows = rows or _Rows(R)
    pairs = twin_leaf_pairs(R.gprime)
    want = sorted(tuple(sorted((R.index[L("P3Leaf", c, 1)], R.index[L("P3Leaf", c, 2)]))) for c in CORNERS)
    if pairs != want:
        return CheckResult("twin_leaves", False, 0, {"twin_pairs": [_describe(R, *p) for p in pairs]})
    for a, b in pairs:
        diff = np.flatnonzero(rows[a] != rows[b])
        if sorted(diff.tolist()) != [a, b]:
            return CheckResult("twin_leaves", False, len(pairs),
                               {"pair": _describe(R, a, b), "separators": _describe(R, *diff[:3].tolist())})
    return CheckResult("twin_leaves", True, len(pairs))


def check_equivalence(R: ReductionInstance, rows: Optional[_Rows] = None) -> list[CheckResult]:
    """Optimum correspondence and both solution maps on one reduction.

    Returns the checks ``equivalence`` (gamma + 4 = metric dimension, and the
    decision answers at h and k agree) and ``round_trip`` (every minimum
    dominating set maps to a resolving set and back to itself; the solver's
    metric basis maps back to a dominating set of size at most |L| - 4).
    """
    rows = rows or _Rows(R)
    src = R.source
    gamma, _ = exact_min_dominating_set(src)
    forced = R.forced_landmarks()
    solved = exact_md_cover(R.gprime, forced)
    md, basis = solved
    eq_ok = gamma + 4 == md and (gamma <= src.h) == (md <= R.k)
    equivalence = CheckResult("equivalence", eq_ok, 1,
                              None if eq_ok else {"min_dominating_set": gamma, "metric_dimension": md,
                                                  "h": src.h, "k": R.k})
    checked = 0
    cex = None
    mins = all_min_dominating_sets(src)
    rows.prefetch([*forced, *(R.index[L("Right", i + 1, 1)] for i in range(R.n))])
    for D in mins:
        checked += 1
        basis_d = map_domset_to_basis(R, D)
        stack = np.vstack([rows[v] for v in sorted(basis_d)])
        left = unresolved_pairs_from_rows(stack)
        if left:
            cex = {"domset": sorted(D), "unresolved": _describe(R, *left[0])}
            break
        back = map_basis_to_domset(R, basis_d)
        if back != set(D):
            cex = {"domset": sorted(D), "mapped_back": sorted(back)}
            break
    if cex is None:
        checked += 1
        back = map_basis_to_domset(R, basis)
        if not is_dominating_set(src, back) or len(back) > len(basis) - 4:
            cex = {"basis": _describe(R, *sorted(basis)), "mapped_back": sorted(back)}
    round_trip = CheckResult("round_trip", cex is None, checked, cex)
    return [equivalence, round_trip]


def verify_instance(inst: BipartiteInstance, y="min", name: str = "", equivalence: bool = True) -> VerificationReport:
    """Normalize, reduce and run every check on one source instance."""
    start = time.perf_counter()
    norm = normalize(inst)
    R = build_reduction(norm, y)
    rows = _Rows(R)
    rows.prefetch(R.forced_landmarks())
    report = VerificationReport(name or _instance_name(inst), R.n, R.y, len(norm.edges()), R.gprime.vertex_count)
    report.checks += [
        check_structure(R),
        check_forced_landmark_census(R, rows),
        check_census_excess(R, rows),
        check_single_gadget_landmark(R, rows),
        check_closed_form(R, rows),
        check_gadget_lengths(R),
        check_edge_gadget_distances(R, rows),
        check_adjacent_gadget_separation(R, rows),
        check_twin_leaves(R, rows),
    ]
    if equivalence:
        report.checks += check_equivalence(R, rows)
    report.seconds = round(time.perf_counter() - start, 3)
    return report


def _instance_name(inst: BipartiteInstance) -> str:
    edges = ",".join(f"{u + 1}-{v + 1}" for u, v in inst.edges())
    return f"s={inst.s},t={inst.n - inst.s},E=[{edges}]"


@dataclass
class SuiteConfig:
    exhaustive_max_n: int = 6
    random_count: int = 50
    random_max_n: int = 8
    seed: int = 2012
    y: str = "min"
    smoke: bool = True


def suite_instances(config: SuiteConfig) -> list[tuple[str, BipartiteInstance, object]]:
    """(name, instance, y) triples in suite order."""
    out = []
    for k, inst in enumerate(generate.connected_bipartite_instances(config.exhaustive_max_n)):
        out.append((f"exhaustive-{k:03d} {_instance_name(inst)}", inst, config.y))
    for k, inst in enumerate(generate.random_bipartite_instances(config.seed, config.random_count,
                                                                 config.random_max_n)):
        out.append((f"random-{k:03d} {_instance_name(inst)}", inst, config.y))
    if config.smoke:
        out.append(("smoke-auto-y " + _instance_name(SMOKE_INSTANCE), SMOKE_INSTANCE, "auto"))
    return out


# P4 a-b-c-d with a, c on one side: normalizes to n = 6, so y = 10 n^2 = 360.
SMOKE_INSTANCE = BipartiteInstance.from_edges(2, 2, [(0, 2), (1, 2), (1, 3)])


def run_suite(config: Optional[SuiteConfig] = None, progress=None) -> list[VerificationReport]:
    config = config or SuiteConfig()
    reports = []
    for name, inst, y in suite_instances(config):
        report = verify_instance(inst, y, name)
        reports.append(report)
        if progress is not None:
            progress(report)
    return reports


def summary_table(reports: list[VerificationReport]) -> str:
    """One line per check name: how many instances passed it."""
    names = list(dict.fromkeys(c.name for r in reports for c in r.checks))
    width = max([len(x) for x in names] + [5])
    lines = [f"{'check':<{width}}  passed  failed", "-" * (width + 16)]
    for nm in names:
        res = [c for r in reports for c in r.checks if c.name == nm]
        good = sum(c.passed for c in res)
        lines.append(f"{nm:<{width}}  {good:>6}  {len(res) - good:>6}")
    ok = sum(r.ok for r in reports)
    lines.append(f"{len(reports)} instances, {ok} with zero failures")
    return "\n".join(lines)
