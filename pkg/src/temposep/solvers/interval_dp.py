"""Polynomial solver for layers that are unit-interval under one ordering.

With every layer compatible with the same vertex ordering, temporal paths can
be assumed to visit vertices in ordering direction, and any separator can be
trimmed to the ordering window between the terminals.  That supports a table
T[t][i] (labels 1..tau, positions 1..n-1) holding a minimum separator for the
label prefix 1..t such that, after deleting it, nothing beyond position i is
reachable from s.

With position 1 = s and position n = z:

    T[1][1] = first-layer neighborhood of s
    T[t][1] = largest over-window larger-neighborhood of s in labels 1..t
    T[1][i] = smaller of T[1][i-1] and the layer-1 larger-neighborhood of i
    T[t][i] = min over: T[t][i-1];
              the largest larger-neighborhood of i over labels 1..t;
              T[t'][i'] + the largest larger-neighborhood of i over labels
              t'+1..t, for every t' < t and i' < i.

The larger-neighborhood family of a position is replaced by the infeasible
sentinel (all non-terminals) whenever that position is adjacent to z inside
the label window, so the arithmetic needs no special cases.  The answer is
yes iff some |T[tau][i]| fits the budget; that entry is the witness.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..classes import check_order_compatible
from ..errors import IncompatibleOrdering
from ..oracle import Instance, Separator


def _set_key(s: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def interval_dp_table(inst: Instance, ordering: Sequence[int]) -> tuple[list[list[frozenset[int]]], dict[int, int]]:
    """Fill the full table; returns (T, position->original-vertex map).

    T is 1-based in both dimensions: T[t][i] for t in 1..tau, i in 1..n-1.
    The ordering is reversed when s comes after z, and vertices outside the
    s..z ordering window are deleted up front; neither changes the answer.
    """
    order = tuple(ordering)
    checked = check_order_compatible(inst.g, order)
    if not checked.ok:
        raise IncompatibleOrdering(
            f"layer {checked.violation.layer} violates indifference at positions "
            f"({checked.violation.i},{checked.violation.j},{checked.violation.k})"
        )
    pos = {v: i for i, v in enumerate(order)}
    if pos[inst.s] > pos[inst.z]:
        order = tuple(reversed(order))
        pos = {v: i for i, v in enumerate(order)}
    window = [order[i] for i in range(pos[inst.s], pos[inst.z] + 1)]
    g, remap = inst.g.induced(window)
    back = {new: old for old, new in remap.items()}

    # Position q (1-based) holds the window vertex with new id by_pos[q].
    by_pos = [None] + [remap[v] for v in window]
    pos_of = {vid: q for q, vid in enumerate(by_pos) if vid is not None}
    n = len(window)
    tau = g.tau
    to_original = {q: back[by_pos[q]] for q in range(1, n + 1)}

    larger: list[list[frozenset[int]]] = [[frozenset()] * (n + 1) for _ in range(tau + 1)]
    z_labels: list[set[int]] = [set() for _ in range(n + 1)]
    for t in range(1, tau + 1):
        adj: dict[int, set[int]] = {}
        for u, v in g.layer_edge_sets[t - 1]:
            qu, qv = pos_of[u], pos_of[v]
            adj.setdefault(qu, set()).add(qv)
            adj.setdefault(qv, set()).add(qu)
        for q in range(1, n + 1):
            nbrs = adj.get(q, set())
            larger[t][q] = frozenset(w for w in nbrs if w > q)
            if n in nbrs:
                z_labels[q].add(t)

    sentinel = frozenset(range(2, n))  # every non-terminal position

    def best_nbhd(q: int, a: int, b: int) -> frozenset[int]:
        """argmax by size over the window family; ties to the smallest label."""
        if any(t in z_labels[q] for t in range(a, b + 1)):
            return sentinel
        best = larger[a][q]
        for t in range(a + 1, b + 1):
            if len(larger[t][q]) > len(best):
                best = larger[t][q]
        return best

    table: list[list[frozenset[int]]] = [[frozenset()] * n for _ in range(tau + 1)]
    for t in range(1, tau + 1):
        table[t][1] = best_nbhd(1, 1, t)
    for i in range(2, n):
        table[1][i] = min((table[1][i - 1], best_nbhd(i, 1, 1)), key=_set_key)
    for t in range(2, tau + 1):
        for i in range(2, n):
            candidates = [table[t][i - 1], best_nbhd(i, 1, t)]
            for t_prev in range(1, t):
                tail = best_nbhd(i, t_prev + 1, t)
                for i_prev in range(1, i):
                    candidates.append(table[t_prev][i_prev] | tail)
            table[t][i] = min(candidates, key=_set_key)
    return table, to_original


def solve_interval_dp(inst: Instance, ordering: Sequence[int]) -> Optional[Separator]:
    """A minimum separator via the ordering table, or None above budget."""
    if inst.g.tau == 0 or not inst.g.edges:
        return Separator(frozenset())
    table, to_original = interval_dp_table(inst, ordering)
    tau = len(table) - 1
    best = min(table[tau][1:], key=_set_key)
    if len(best) > inst.k:
        return None
    return Separator(frozenset(to_original[q] for q in best))
