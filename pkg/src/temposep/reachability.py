"""Temporal (s,z)-path discovery, strict and non-strict.

Path existence is decided by a label-ordered sweep over the sorted edge list:
within one label the non-strict sweep runs a multi-source BFS over the layer
(several hops may share a label), while the strict sweep relaxes each layer's
edges exactly once against arrivals from earlier labels.  Either way the work
is linear in the number of time-edges.

The explicit time-expanded digraph (one node per vertex/label incidence plus
terminals, column arcs for waiting) is also provided: directed (s,z)-paths in
it correspond one-to-one to temporal (s,z)-paths, which makes it a convenient
cross-check and debugging object.  For the strict variant each vertex/label
node is split into an entry and an exit half so that entering and leaving a
vertex at the same label is impossible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import TemporalGraph
from .errors import VertexOutOfRange

UNREACHED = float("inf")


class PathStep(NamedTuple):
    """One oriented traversal of a time-edge."""

    frm: int
    to: int
    t: int


@dataclass(frozen=True)
class TemporalPath:
    """A label-monotone, vertex-disjoint sequence of oriented time-edges."""

    steps: tuple[PathStep, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def departure(self) -> int:
        return self.steps[0].t

    @property
    def arrival(self) -> int:
        return self.steps[-1].t

    def vertices(self) -> list[int]:
        """All visited vertices, in visiting order."""
        if not self.steps:
            return []
        return [self.steps[0].frm] + [st.to for st in self.steps]


def is_valid_path(g: TemporalGraph, path: TemporalPath, s: int, z: int, strict: bool = False) -> bool:
    """Re-validate a witness against the graph it claims to live in."""
    steps = path.steps
    if not steps:
        return False
    if steps[0].frm != s or steps[-1].to != z:
        return False
    verts = path.vertices()
    if len(set(verts)) != len(verts):
        return False
    labels = g.edge_labels
    prev_t = None
    prev_to = None
    for st in steps:
        pair = (min(st.frm, st.to), max(st.frm, st.to))
        if st.t not in labels.get(pair, ()):
            return False
        if prev_to is not None and st.frm != prev_to:
            return False
        if prev_t is not None and (st.t < prev_t or (strict and st.t <= prev_t)):
            return False
        prev_t, prev_to = st.t, st.to
    return True


def _check_terminals(g: TemporalGraph, s: int, z: int) -> None:
    for v in (s, z):
        if not (0 <= v < g.n):
            raise VertexOutOfRange(f"terminal {v} outside 0..{g.n - 1}")
    if s == z:
        raise VertexOutOfRange(f"terminals must be distinct, both are {s}")


def _sweep(g: TemporalGraph, s: int, strict: bool) -> tuple[list[float], dict[int, tuple[int, int]]]:
    """Earliest arrival labels from s, with predecessor links for witnesses.

    Ties are broken deterministically: earliest label first, then fewest hops
    within the label (non-strict), then smallest predecessor vertex.
    """
    arrival: list[float] = [UNREACHED] * g.n
    arrival[s] = 0
    pred: dict[int, tuple[int, int]] = {}
    for t_idx, pairs in enumerate(g.layer_edge_sets):
        t = t_idx + 1
        if not pairs:
            continue
        adj: dict[int, list[int]] = {}
        for u, v in pairs:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        if strict:
            # One hop per label: relax against arrivals from labels < t only.
            updates: dict[int, int] = {}
            for a in adj:
                if arrival[a] <= t - 1:
                    for b in adj[a]:
                        if arrival[b] == UNREACHED and (b not in updates or a < updates[b]):
                            updates[b] = a
            for b, a in updates.items():
                arrival[b] = t
                pred[b] = (a, t)
        else:
            # Level-synchronized multi-source BFS inside the layer.
            frontier = sorted(v for v in adj if arrival[v] <= t)
            while frontier:
                found: dict[int, int] = {}
                for a in frontier:
                    for b in adj[a]:
                        if arrival[b] == UNREACHED and (b not in found or a < found[b]):
                            found[b] = a
                for b, a in found.items():
                    arrival[b] = t
                    pred[b] = (a, t)
                frontier = sorted(found)
    return arrival, pred


def reachable_with_earliest_arrival(g: TemporalGraph, s: int) -> dict[int, int]:
    """Earliest arrival label of every reachable vertex; s maps to 0.

    Unreachable vertices are absent from the result.
    """
    if not (0 <= s < g.n):
        raise VertexOutOfRange(f"source {s} outside 0..{g.n - 1}")
    arrival, _ = _sweep(g, s, strict=False)
    return {v: int(a) for v, a in enumerate(arrival) if a != UNREACHED}


def find_temporal_path(g: TemporalGraph, s: int, z: int, strict: bool = False) -> Optional[TemporalPath]:
    """A temporal (s,z)-path witness, or None when z is unreachable.

    The predecessor chain of the arrival sweep is simple by construction
    (each link strictly decreases (label, hop level)), so the extracted
    witness is vertex-disjoint.
    """
    _check_terminals(g, s, z)
    arrival, pred = _sweep(g, s, strict)
    if arrival[z] == UNREACHED:
        return None
    steps: list[PathStep] = []
    cur = z
    while cur != s:
        prv, t = pred[cur]
        steps.append(PathStep(prv, cur, t))
        cur = prv
    steps.reverse()
    return TemporalPath(tuple(steps))


class ExpNode(NamedTuple):
    """Descriptor of one expansion node.

    kind is 'source', 'sink', 'node' (non-strict), 'in', or 'out';
    vertex/label are None for the terminals.
    """

    kind: str
    vertex: Optional[int]
    label: Optional[int]


@dataclass(frozen=True)
class StaticExpansion:
    """Time-expanded digraph of (g, s, z); see the module docstring."""

    strict: bool
    nodes: tuple[ExpNode, ...]
    source: int
    sink: int
    layer_arcs: tuple[tuple[int, int], ...]
    source_arcs: tuple[tuple[int, int], ...]
    sink_arcs: tuple[tuple[int, int], ...]
    column_arcs: tuple[tuple[int, int], ...]

    def all_arcs(self) -> tuple[tuple[int, int], ...]:
        return self.layer_arcs + self.source_arcs + self.sink_arcs + self.column_arcs

    def has_sz_path(self) -> bool:
        """BFS from source to sink; equivalent to temporal reachability."""
        adj: dict[int, list[int]] = {}
        for a, b in self.all_arcs():
            adj.setdefault(a, []).append(b)
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            cur = queue.popleft()
            if cur == self.sink:
                return True
            for nxt in adj.get(cur, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False


def build_expansion(g: TemporalGraph, s: int, z: int, strict: bool = False) -> StaticExpansion:
    """Construct the time-expanded digraph of (g, s, z).

    A direct s-z time-edge (which separation instances forbid) is represented
    by a source->sink arc so that reachability on the expansion stays faithful
    on raw graphs.
    """
    _check_terminals(g, s, z)
    active: dict[int, list[int]] = {}
    for e in g.edges:
        for v in (e.u, e.v):
            if v not in (s, z):
                ts = active.setdefault(v, [])
                if not ts or ts[-1] != e.t:
                    ts.append(e.t)

    nodes: list[ExpNode] = [ExpNode("source", None, None), ExpNode("sink", None, None)]
    index: dict[tuple[int, int, str], int] = {}
    kinds = ("in", "out") if strict else ("node",)
    for v in sorted(active):
        for t in active[v]:
            for kind in kinds:
                index[(v, t, kind)] = len(nodes)
                nodes.append(ExpNode(kind, v, t))

    enter = lambda v, t: index[(v, t, "in" if strict else "node")]
    leave = lambda v, t: index[(v, t, "out" if strict else "node")]

    layer_arcs: list[tuple[int, int]] = []
    source_arcs: list[tuple[int, int]] = []
    sink_arcs: list[tuple[int, int]] = []
    column_arcs: list[tuple[int, int]] = []
    for e in g.edges:
        u, v, t = e.u, e.v, e.t
        if {u, v} == {s, z}:
            source_arcs.append((0, 1))
        elif u == s or v == s:
            w = v if u == s else u
            source_arcs.append((0, enter(w, t)))
        elif u == z or v == z:
            w = v if u == z else u
            sink_arcs.append((leave(w, t), 1))
        else:
            layer_arcs.append((leave(u, t), enter(v, t)))
            layer_arcs.append((leave(v, t), enter(u, t)))
    for v in sorted(active):
        ts = active[v]
        for t, t_next in zip(ts, ts[1:]):
            if strict:
                column_arcs.append((enter(v, t), leave(v, t_next)))
                column_arcs.append((leave(v, t), leave(v, t_next)))
            else:
                column_arcs.append((index[(v, t, "node")], index[(v, t_next, "node")]))

    return StaticExpansion(
        strict=strict,
        nodes=tuple(nodes),
        source=0,
        sink=1,
        layer_arcs=tuple(layer_arcs),
        source_arcs=tuple(source_arcs),
        sink_arcs=tuple(sink_arcs),
        column_arcs=tuple(column_arcs),
    )
