"""Reduction from Bipartite Dominating Set to Metric Dimension on max-degree-3 graphs.

Given a normalized instance ``(G, h)`` on ``n`` vertices this builds ``G'``
and ``k = h + 4`` such that ``G`` has a dominating set of size ``h`` iff
``G'`` has a metric basis of size ``k``.  Every vertex of ``G'`` carries a
structured :class:`Label`; gadget indices in labels are one-based, so
``Right(i, j)`` belongs to the gadget of source vertex ``i - 1``.

Layout of ``G'`` (``y`` even, ``y > 8n + 8``; a "y-path" is a path of ``y``
edges):

* top line ``TopHub(1..n)``, consecutive hubs joined by y-paths whose
  internals are ``TopSeg(i, t)``, ``t`` counted from ``TopHub(i)``; the
  bottom line mirrors it.
* a P3 hangs off each line end: ``P3Middle(c)`` with leaves ``P3Leaf(c, 1|2)``
  for corners ``c`` in ``tl, tr, bl, br``.
* vertex gadget ``i``: a ``(2n+2)``-cycle ``AnchorTop(i), Left(i, 1..n),
  AnchorBottom(i), Right(i, n..1)``; each anchor is tied to the matching hub
  by a y-path (``AnchorLinkTop/Bottom(i, t)``, ``t`` counted from the hub).
* edge gadget ``(i, j)``, ``i < j``: a path of ``(j - i + 3/2) y`` edges from
  ``Right(i, j)`` to ``Right(j, i)``.  ``EdgeW(i, j, 1)`` and ``EdgeW(i, j, 2)``
  sit ``y`` steps from either end, and each is tied by a y-path to a top-line
  attachment: ``TopSeg(i, j)`` (``j`` steps right of ``TopHub(i)``) and
  ``TopSeg(j - 1, y - i)`` (``i`` steps left of ``TopHub(j)``).  Internals are
  ``EdgePart(i, j, part, t)`` for parts ``BL`` (from ``Right(i, j)``), ``TL``
  (from the first attachment), ``M`` (from ``EdgeW(i, j, 1)``), ``TR`` (from
  the second attachment) and ``BR`` (from ``Right(j, i)``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Union

from .bds import BipartiteInstance, is_dominating_set
from .graph import Graph, degree_profile, write_edge_list
from .mdim import is_resolving_set

CORNERS = ("tl", "tr", "bl", "br")
PARTS = ("BL", "TL", "M", "TR", "BR")
NOT_COVERED = None


class ReductionError(ValueError):
    pass


class Label(NamedTuple):
    kind: str
    args: tuple

    def __str__(self) -> str:
        return f"{self.kind}({','.join(str(a) for a in self.args)})"

    @classmethod
    def parse(cls, text: str) -> "Label":
        m = re.fullmatch(r"\s*(\w+)\((.*)\)\s*", text)
        if not m:
            raise ValueError(f"bad label {text!r}")
        raw = [a.strip() for a in m.group(2).split(",")] if m.group(2).strip() else []
        args = tuple(int(a) if re.fullmatch(r"-?\d+", a) else a for a in raw)
        return cls(m.group(1), args)


def L(kind: str, *args) -> Label:
    return Label(kind, tuple(args))


def _as_label(x: Union[Label, str]) -> Label:
    return Label.parse(x) if isinstance(x, str) else x


@dataclass(frozen=True)
class ReductionParams:
    n: int
    y: int
    h: int

    @property
    def k(self) -> int:
        return self.h + 4


def auto_y(n: int) -> int:
    return 10 * n * n


def min_y(n: int) -> int:
    """Smallest even y with y/4 > 2n + 2."""
    return 8 * n + 10


def resolve_y(n: int, y: Union[int, str, None]) -> int:
    if y is None or y == "auto":
        y = auto_y(n)
    elif y == "min":
        y = min_y(n)
    y = int(y)
    if y % 2:
        raise ReductionError(f"y must be even, got {y}")
    if 4 * (2 * n + 2) >= y:
        raise ReductionError(f"y must exceed 8n+8 = {8 * n + 8}, got {y}")
    return y


def vertex_census(n: int, y: int, edges: Iterable[tuple[int, int]]) -> int:
    """Closed-form |V'| for one-based source edges ``(i, j)``."""
    total = 2 * n + 2 * (n - 1) * (y - 1) + 12 + 2 * n * (y - 1) + n * (2 * n + 2)
    for i, j in edges:
        total += (j - i) * y + 3 * y // 2 - 1 + 2 * (y - 1)
    return total


def edge_census(n: int, y: int, edges: Iterable[tuple[int, int]]) -> int:
    total = 2 * (n - 1) * y + 12 + 2 * n * y + n * (2 * n + 2)
    for i, j in edges:
        total += (j - i) * y + 3 * y // 2 + 2 * y
    return total


@dataclass
class ReductionInstance:
    gprime: Graph
    params: ReductionParams
    source: BipartiteInstance
    labels: list[Label]
    index: dict[Label, int]
    attachments: dict[Label, int] = field(default_factory=dict)
    attachment_of: dict[int, Label] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def y(self) -> int:
        return self.params.y

    @property
    def k(self) -> int:
        return self.params.k

    def source_edges(self) -> list[tuple[int, int]]:
        """Source edges as one-based ``(i, j)``, ``i < j``."""
        return [(u + 1, v + 1) for u, v in self.source.edges()]

    def vertex(self, label: Union[Label, str]) -> int:
        label = _as_label(label)
        if label.kind == "Attach":
            return self.attachments[label]
        return self.index[label]

    def label(self, v: int) -> Label:
        return self.labels[v]

    def forced_landmarks(self) -> list[int]:
        """The designated P3 leaves u^t_l, u^t_r, u^b_l, u^b_r, in corner order."""
        return [self.index[L("P3Leaf", c, 1)] for c in CORNERS]

    def gadget_of(self, v: int) -> Optional[tuple[str, tuple[int, ...]]]:
        """``("vertex", (i,))``, ``("edge", (i, j, part))`` or None for skeletal vertices."""
        lab = self.labels[v]
        kind, a = lab.kind, lab.args
        if kind in ("Left", "Right", "AnchorTop", "AnchorBottom", "AnchorLinkTop", "AnchorLinkBottom"):
            return "vertex", (a[0],)
        if kind == "EdgePart":
            return "edge", (a[0], a[1], a[2])
        if kind == "EdgeW":
            return "edge", (a[0], a[1], "M")
        return None


def build_reduction(inst: BipartiteInstance, y: Union[int, str, None] = "auto") -> ReductionInstance:
    """Construct ``G'`` from a normalized instance.

    ``y`` is an even integer, ``"auto"`` (``10 n^2``) or ``"min"``
    (``8n + 10``, the smallest admissible value).
    """
    if not inst.is_normalized():
        raise ReductionError("instance is not normalized: some edge has j < i + 3")
    n = inst.n
    if n < 1:
        raise ReductionError("source instance needs at least one vertex")
    y = resolve_y(n, y)
    edges = [(u + 1, v + 1) for u, v in inst.edges()]

    g = Graph()
    labels: list[Label] = []

    def new(label: Label) -> int:
        v = g.add_vertex()
        labels.append(label)
        return v

    def path(u: int, v: int, length: int, make) -> list[int]:
        inner = g.add_path(u, v, length)
        for t, w in enumerate(inner, 1):
            labels.append(make(t))
        return inner

    top = [None] + [new(L("TopHub", i)) for i in range(1, n + 1)]
    bottom = [None] + [new(L("BottomHub", i)) for i in range(1, n + 1)]
    top_seg: dict[tuple[int, int], int] = {}
    for i in range(1, n):
        for t, w in enumerate(path(top[i], top[i + 1], y, lambda t, i=i: L("TopSeg", i, t)), 1):
            top_seg[i, t] = w
        path(bottom[i], bottom[i + 1], y, lambda t, i=i: L("BottomSeg", i, t))

    hub_of_corner = {"tl": top[1], "tr": top[n], "bl": bottom[1], "br": bottom[n]}
    for c in CORNERS:
        mid = new(L("P3Middle", c))
        g.add_edge(hub_of_corner[c], mid)
        for which in (1, 2):
            g.add_edge(mid, new(L("P3Leaf", c, which)))

    right: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        at = new(L("AnchorTop", i))
        ab = new(L("AnchorBottom", i))
        for side, store in (("Left", None), ("Right", right)):
            chain = [new(L(side, i, j)) for j in range(1, n + 1)]
            for a, b in zip([at, *chain], [*chain, ab]):
                g.add_edge(a, b)
            if store is not None:
                for j, v in enumerate(chain, 1):
                    store[i, j] = v
        path(top[i], at, y, lambda t, i=i: L("AnchorLinkTop", i, t))
        path(bottom[i], ab, y, lambda t, i=i: L("AnchorLinkBottom", i, t))

    attachments: dict[Label, int] = {}
    attachment_of: dict[int, Label] = {}
    for i, j in edges:
        length = (j - i) * y + 3 * y // 2
        inner = g.add_path(right[i, j], right[j, i], length)
        for pos, w in enumerate(inner, 1):
            if pos < y:
                lab = L("EdgePart", i, j, "BL", pos)
            elif pos == y:
                lab = L("EdgeW", i, j, 1)
            elif pos < length - y:
                lab = L("EdgePart", i, j, "M", pos - y)
            elif pos == length - y:
                lab = L("EdgeW", i, j, 2)
            else:
                lab = L("EdgePart", i, j, "BR", length - pos)
            labels.append(lab)
        w1, w2 = inner[y - 1], inner[length - y - 1]
        for which, seg_key, w, part in ((1, (i, j), w1, "TL"), (2, (j - 1, y - i), w2, "TR")):
            anchor = top_seg.get(seg_key)
            if anchor is None or anchor in attachment_of or g.degree(anchor) != 2:
                raise ReductionError(f"attachment collision for edge gadget ({i}, {j})")
            alias = L("Attach", i, j, which)
            attachments[alias] = anchor
            attachment_of[anchor] = alias
            path(anchor, w, y, lambda t, part=part: L("EdgePart", i, j, part, t))

    g.seal()
    index = {lab: v for v, lab in enumerate(labels)}
    if len(index) != len(labels) or len(labels) != g.vertex_count:
        raise AssertionError("vertex labels are not a bijection")
    expected = vertex_census(n, y, edges)
    if g.vertex_count != expected:
        raise AssertionError(f"vertex census mismatch: {g.vertex_count} != {expected}")
    if g.edge_count != edge_census(n, y, edges):
        raise AssertionError("edge census mismatch")
    if max(degree_profile(g)) != 3:
        raise AssertionError("maximum degree is not 3")
    params = ReductionParams(n=n, y=y, h=inst.h)
    return ReductionInstance(g, params, inst, labels, index, attachments, attachment_of)


# -- closed-form distances ----------------------------------------------------

def _canonical(R: ReductionInstance, label: Label) -> Label:
    if label.kind == "TopSeg":
        v = R.index.get(label)
        if v is not None and v in R.attachment_of:
            return R.attachment_of[v]
    return label


def _formula(R: ReductionInstance, a: Label, b: Label) -> Optional[int]:
    n, y = R.n, R.y
    if b.kind not in ("TopHub", "BottomHub"):
        return None
    h = b.args[0]
    top = b.kind == "TopHub"
    if a.kind in ("TopHub", "BottomHub"):
        i = a.args[0]
        if (a.kind == "TopHub") == top:
            return abs(h - i) * y
        return (abs(h - i) + 2) * y + n + 1
    if a.kind == "Right":
        i, j = a.args
        if h == 1:
            return i * y + j if top else i * y + n - j + 1
        if h == n:
            return (n - i + 1) * y + j if top else (n - i + 1) * y + n - j + 1
        return None
    if a.kind == "Attach":
        i, j, which = a.args
        if which == 1:
            if top and h == 1:
                return (i - 1) * y + j
            if top and h == n:
                return (n - i) * y - j
            if not top and h == n:
                return (n - i + 2) * y - j + n + 1
        else:
            if top and h == 1:
                return (j - 1) * y - i
            if top and h == n:
                return (n - j) * y + i
            if not top and h == n:
                return (n - j + 2) * y + i + n + 1
    return None


def closed_form_distance(R: ReductionInstance, a: Union[Label, str], b: Union[Label, str]) -> Optional[int]:
    """Distance between two labeled vertices of ``G'`` from the known formulas.

    Covered: hub/hub on the same or different lines, ``Right(i, j)`` to the
    four line ends, and edge-gadget attachments (``Attach(i, j, 1|2)`` or the
    aliased ``TopSeg``) to ``TopHub(1)``, ``TopHub(n)`` and ``BottomHub(n)``.
    Anything else gives :data:`NOT_COVERED`.
    """
    a, b = _canonical(R, _as_label(a)), _canonical(R, _as_label(b))
    if a == b:
        return 0
    d = _formula(R, a, b)
    return d if d is not None else _formula(R, b, a)


def covered_pairs(R: ReductionInstance) -> list[tuple[Label, Label]]:
    """Every unordered label pair closed_form_distance has a formula for."""
    n = R.n
    hubs = [L("TopHub", i) for i in range(1, n + 1)] + [L("BottomHub", i) for i in range(1, n + 1)]
    pairs = [(a, b) for k, a in enumerate(hubs) for b in hubs[k + 1:]]
    ends = list(dict.fromkeys([L("TopHub", 1), L("TopHub", n), L("BottomHub", 1), L("BottomHub", n)]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pairs.extend((L("Right", i, j), e) for e in ends)
    att_ends = list(dict.fromkeys([L("TopHub", 1), L("TopHub", n), L("BottomHub", n)]))
    for alias in R.attachments:
        pairs.extend((alias, e) for e in att_ends)
    return pairs


# -- solution maps -------------------------------------------------------------

def map_domset_to_basis(R: ReductionInstance, members: Iterable[int]) -> set[int]:
    """The four forced leaves plus ``Right(i+1, 1)`` for every member ``i`` of D."""
    members = set(members)
    if not is_dominating_set(R.source, members):
        raise ReductionError("not a dominating set of the source instance")
    return set(R.forced_landmarks()) | {R.index[L("Right", i + 1, 1)] for i in members}


def map_basis_to_domset(R: ReductionInstance, landmarks: Iterable[int]) -> set[int]:
    """Project a metric basis of ``G'`` to a dominating set of the source.

    A landmark in vertex gadget ``i`` (cycle, anchors, anchor links) gives
    source vertex ``i``; one in edge gadget ``(i, j)`` gives ``i`` on the TL
    or BL part and ``j`` otherwise; skeletal landmarks give nothing.  Result
    ids are 0-based.
    """
    landmarks = set(landmarks)
    if not is_resolving_set(R.gprime, landmarks):
        raise ReductionError("landmarks do not resolve G'")
    out = set()
    for v in landmarks:
        where = R.gadget_of(v)
        if where is None:
            continue
        kind, args = where
        if kind == "vertex":
            out.add(args[0] - 1)
        else:
            i, j, part = args
            out.add((i if part in ("TL", "BL") else j) - 1)
    return out


# -- output ----------------------------------------------------------------------

def sidecar(R: ReductionInstance) -> dict:
    """Label sidecar; keys are the 1-based vertex indices of the edge-list file."""
    return {
        "n": R.n,
        "y": R.y,
        "k": R.k,
        "labels": {str(v + 1): str(lab) for v, lab in enumerate(R.labels)},
    }


def write_reduction(R: ReductionInstance, graph_path, labels_path) -> None:
    with open(graph_path, "w") as f:
        write_edge_list(R.gprime, f)
    with open(labels_path, "w") as f:
        json.dump(sidecar(R), f, indent=None, separators=(",", ":"))
        f.write("\n")


def read_sidecar(path) -> dict:
    """Parse a sidecar back into ``{"n", "y", "k", "labels": {vertex_id: Label}}`` (0-based ids)."""
    with open(path) as f:
        data = json.load(f)
    data["labels"] = {int(k) - 1: Label.parse(v) for k, v in data["labels"].items()}
    return data
