"""Constructive instance transformations with machine-checked guarantees.

Each transformation returns the new instance together with a report whose
checklist is re-verified on the produced output by independent checkers
(layer edge counts, steadiness, window connectivity, claw-freeness) rather
than assumed from the construction.  The budget delta states how the minimum
separator size moves: 0 everywhere except the universal-vertex insertion,
which charges +1 for the unavoidable hub.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable

from .classes import classify
from .core import StaticGraph, TemporalGraph, build, concat, from_layers, power
from .errors import DegreeTooSmall, LayersNotEqual
from .oracle import Instance


@dataclass(frozen=True)
class ReductionReport:
    """What a transformation did and which guarantees the output satisfies."""

    kind: str
    input_summary: dict[str, int]
    output: Instance
    budget_delta: int
    checks: dict[str, bool]
    details: dict[str, int | str]

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())


def _summary(inst: Instance) -> dict[str, int]:
    return {"n": inst.g.n, "m": len(inst.g.edges), "tau": inst.g.tau, "k": inst.k}


def _report(kind: str, inst: Instance, out: Instance, delta: int, checks, details) -> ReductionReport:
    return ReductionReport(
        kind=kind,
        input_summary=_summary(inst),
        output=out,
        budget_delta=delta,
        checks=checks,
        details=details,
    )


def one_edge_per_layer(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Spread every layer into sub-layers holding one edge each.

    Layer i with m edges becomes the m-th power of the graph placing its
    edges on m consecutive sub-layers (lexicographic edge order), which keeps
    exactly the same reachability between original layers.  Empty layers
    contribute nothing.
    """
    g = inst.g
    parts = []
    for t in range(1, g.tau + 1):
        layer_edges = sorted(g.layer_edge_sets[t - 1])
        if not layer_edges:
            continue
        single = from_layers(g.n, ([e] for e in layer_edges))
        parts.append(power(single, len(layer_edges)))
    if parts:
        out_g = parts[0]
        for part in parts[1:]:
            out_g = concat(out_g, part)
    else:
        out_g = TemporalGraph(g.n, 0, ())
    out = replace(inst, g=out_g)
    checks = {
        "at_most_one_edge_per_layer": all(len(es) <= 1 for es in out_g.layer_edge_sets),
        "tau_within_n4_bound": out_g.tau <= g.tau * g.n**4,
        "underlying_preserved": out_g.underlying() == g.underlying(),
    }
    details = {"tau_out": out_g.tau, "tau_bound": g.tau * g.n**4}
    return out, _report("one-edge", inst, out, 0, checks, details)


def complete_but_one(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Densify the underlying graph to all pairs except the terminal pair.

    Original labels shift up by one; missing pairs avoiding s appear at label
    1, missing s-pairs at label tau+2.  The early edges are unusable before
    any path leaves s and the late ones dead-end, so separators transfer
    one-to-one.
    """
    g = inst.g
    triples = [(e.u, e.v, e.t + 1) for e in g.edges]
    present = g.underlying().edges
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (u, v) in present or {u, v} == {inst.s, inst.z}:
                continue
            if inst.s in (u, v):
                triples.append((u, v, g.tau + 2))
            else:
                triples.append((u, v, 1))
    out_g = build(g.n, g.tau + 2, triples)
    out = replace(inst, g=out_g)
    under = out_g.underlying()
    expected = g.n * (g.n - 1) // 2 - 1
    checks = {
        "underlying_is_complete_but_one": len(under.edges) == expected
        and (min(inst.s, inst.z), max(inst.s, inst.z)) not in under.edges,
        "tau_is_input_plus_two": out_g.tau == g.tau + 2,
    }
    details = {"underlying_edges": len(under.edges), "expected_edges": expected}
    return out, _report("complete-but-one", inst, out, 0, checks, details)


def pad_monotone(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Interleave empty layers: layer 2i-1 copies input layer i, layer 2i is empty."""
    g = inst.g
    if g.tau <= 1:
        out = inst
    else:
        layers: list = []
        for t in range(1, g.tau + 1):
            layers.append(g.layer_edge_sets[t - 1])
            if t < g.tau:
                layers.append(frozenset())
        out = replace(inst, g=from_layers(g.n, layers))
    out_g = out.g
    odd_match = all(
        out_g.layer_edge_sets[2 * i] == g.layer_edge_sets[i] for i in range(g.tau)
    )
    even_empty = all(not out_g.layer_edge_sets[2 * i + 1] for i in range(g.tau - 1))
    expected_tau = 2 * g.tau - 1 if g.tau >= 1 else 0
    checks = {
        "tau_is_2tau_minus_1": out_g.tau == expected_tau,
        "odd_layers_copy_input": odd_match,
        "even_layers_empty": even_empty,
    }
    details = {"tau_out": out_g.tau}
    return out, _report("pad-monotone", inst, out, 0, checks, details)


def add_universal_vertex(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Insert a hub adjacent to everything in every layer; budget grows by one.

    The hub bridges the terminals inside any single layer, so every separator
    must contain it, and removing it restores the input exactly.
    """
    g = inst.g
    hub = g.n
    triples = g.raw_triples()
    for t in range(1, g.tau + 1):
        triples.extend((w, hub, t) for w in range(g.n))
    out_g = build(g.n + 1, g.tau, triples)
    out = Instance(g=out_g, s=inst.s, z=inst.z, k=inst.k + 1)
    profile = classify(out_g)
    checks = {
        "interval_connected_for_every_window": profile.interval_connected_max_t == out_g.tau,
        "hub_in_every_layer": all(
            all((min(w, hub), max(w, hub)) in es for w in range(g.n))
            for es in out_g.layer_edge_sets
        ),
    }
    details = {"hub": hub, "max_window": profile.interval_connected_max_t}
    return out, _report("universal", inst, out, +1, checks, details)


def steadyify(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Rebuild each layer one edge at a time so consecutive layers differ by one.

    Each input layer expands into a build-up run followed by a tear-down run
    (lexicographic edge order both ways); runs share their empty boundary
    layers, so the output has 2 * (total edges) + 1 layers and is 1-steady.
    The full-layer snapshots are exactly the peaks, so the answer carries over.
    """
    g = inst.g
    layers: list[frozenset] = [frozenset()]
    for t in range(1, g.tau + 1):
        ordered = sorted(g.layer_edge_sets[t - 1])
        current: set = set()
        for e in ordered:
            current.add(e)
            layers.append(frozenset(current))
        for e in ordered:
            current.discard(e)
            layers.append(frozenset(current))
    out_g = from_layers(g.n, layers)
    out = replace(inst, g=out_g)
    lam = classify(out_g).steady_lambda
    total_edges = sum(len(es) for es in g.layer_edge_sets)
    checks = {
        "output_is_at_most_1_steady": lam <= 1,
        "tau_is_2m_plus_1": out_g.tau == 2 * total_edges + 1,
        "underlying_preserved": out_g.underlying() == g.underlying(),
    }
    details = {"steady_lambda": lam, "tau_out": out_g.tau}
    return out, _report("steady", inst, out, 0, checks, details)


def is_claw_free(g: StaticGraph) -> bool:
    """No induced star with three leaves anywhere."""
    for v in range(g.n):
        nbrs = sorted(g.adjacency[v])
        for a, b, c in combinations(nbrs, 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return False
    return True


def line_graph_gadget(inst: Instance) -> tuple[Instance, ReductionReport]:
    """Rebuild a strict instance with identical layers as a non-strict one
    whose underlying graph is a line graph.

    Every original vertex v becomes a clique on deg(v)+1 vertices: one spare
    hub v* plus one carrier per incident edge.  Every original edge becomes
    two parallel length-3 paths between its carriers, with 'stilt' edges
    (between the twin path inners and between non-hub clique members) that
    exist only at label 1, where no path from a hub can use them: they are
    present purely so the underlying graph is a line graph.  Hubs see their
    clique at every label 2..2tau+2, and in period t each path runs across
    the labels 2t, 2t+1, 2t+2.  Any hub-to-hub traversal therefore starts
    and ends on even labels and costs two labels, in either direction, so a
    chain of L hops fits iff L <= tau: exactly the strict-path capacity of
    the input.  (Letting a hop complete within one even/odd pair would allow
    chains of 2*tau-1 hops, which breaks the correspondence already on a
    5-cycle with tau=2.)  Minimum strict separators map to minimum
    non-strict hub separators and back, so the budget is kept.
    """
    g = inst.g
    sets = g.layer_edge_sets
    if g.tau < 1 or any(es != sets[0] for es in sets):
        raise LayersNotEqual("gadget needs every layer equal")
    under = g.underlying()
    for v in range(g.n):
        if under.degree(v) < 2:
            raise DegreeTooSmall(f"vertex {v} has degree {under.degree(v)} in the underlying graph")

    ids: dict[tuple, int] = {}

    def vid(tag: tuple) -> int:
        if tag not in ids:
            ids[tag] = len(ids)
        return ids[tag]

    hubs = {v: vid(("hub", v)) for v in range(g.n)}
    carrier: dict[tuple[int, tuple[int, int]], int] = {}
    for v in range(g.n):
        for e in sorted((min(v, w), max(v, w)) for w in under.adjacency[v]):
            carrier[(v, e)] = vid(("carrier", v, e))
    inner: dict[tuple, int] = {}
    for e in sorted(under.edges):
        for side in ("a", "b"):
            for end in (0, 1):
                inner[(e, side, end)] = vid(("inner", e, side, end))

    triples: list[tuple[int, int, int]] = []
    tau_out = 2 * g.tau + 2

    # Stilts, label 1 only: twin-path rungs and clique edges avoiding the hub.
    for e in sorted(under.edges):
        triples.append((inner[(e, "a", 0)], inner[(e, "b", 0)], 1))
        triples.append((inner[(e, "a", 1)], inner[(e, "b", 1)], 1))
    for v in range(g.n):
        members = sorted(carrier[(v, e)] for e in {(min(v, w), max(v, w)) for w in under.adjacency[v]})
        for a, b in combinations(members, 2):
            triples.append((a, b, 1))

    # Hub stars, labels 2..2tau+2.
    for v in range(g.n):
        for w in under.adjacency[v]:
            e = (min(v, w), max(v, w))
            for t in range(2, tau_out + 1):
                triples.append((hubs[v], carrier[(v, e)], t))

    # The two carrier-to-carrier paths; in period t each one spreads over
    # labels 2t, 2t+1, 2t+2 (path a leads with the x end, path b with y).
    for e in sorted(under.edges):
        x = carrier[(e[0], e)]
        y = carrier[(e[1], e)]
        xa, ya = inner[(e, "a", 0)], inner[(e, "a", 1)]
        xb, yb = inner[(e, "b", 0)], inner[(e, "b", 1)]
        for t in range(1, g.tau + 1):
            lead, mid, trail = 2 * t, 2 * t + 1, 2 * t + 2
            triples.extend([(x, xa, lead), (xa, ya, mid), (ya, y, trail)])
            triples.extend([(y, yb, lead), (yb, xb, mid), (xb, x, trail)])

    out_g = build(len(ids), tau_out, triples)
    out = Instance(g=out_g, s=hubs[inst.s], z=hubs[inst.z], k=inst.k)
    out_under = out_g.underlying()
    checks = {
        "underlying_is_claw_free": is_claw_free(out_under),
        "clique_sizes_are_degree_plus_one": all(
            1 + sum(1 for tag in ids if tag[0] == "carrier" and tag[1] == v)
            == under.degree(v) + 1
            for v in range(g.n)
        ),
        "tau_is_2tau_plus_2": out_g.tau == 2 * g.tau + 2,
    }
    details = {"n_out": out_g.n, "tau_out": out_g.tau}
    return out, _report("line-graph", inst, out, 0, checks, details)


REDUCTIONS: dict[str, Callable[[Instance], tuple[Instance, ReductionReport]]] = {
    "one-edge": one_edge_per_layer,
    "complete-but-one": complete_but_one,
    "pad-monotone": pad_monotone,
    "universal": add_universal_vertex,
    "steady": steadyify,
    "line-graph": line_graph_gadget,
}
