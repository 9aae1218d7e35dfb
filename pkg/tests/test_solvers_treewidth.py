"""Treewidth DP against the oracle and against exhaustive coloring semantics."""

from itertools import product

import pytest
from strategies import instance_graphs
from hypothesis import given, settings

from temposep import (
    Instance,
    build,
    build_tree_decomposition,
    is_separator,
    min_separator_bruteforce,
    solve_treewidth_dp,
)
from temposep.errors import DecompositionMismatch
from temposep.reachability import reachable_with_earliest_arrival
from temposep.solvers.treewidth_dp import treewidth_root_table


def test_g1_budget_one(g1_inst):
    td = build_tree_decomposition(g1_inst.g.underlying(), 0, 3)
    found = solve_treewidth_dp(g1_inst, td)
    assert found is not None and found.size == 1
    assert is_separator(g1_inst, found.vertices)


def test_no_path_zero_budget(g2_inst):
    td = build_tree_decomposition(g2_inst.g.underlying(), 0, 3)
    found = solve_treewidth_dp(g2_inst, td)
    assert found is not None and found.size == 0


def test_mismatched_decomposition_rejected():
    edgeless = build(4, 1, [])
    td = build_tree_decomposition(edgeless.underlying(), 0, 3)
    with_inner_edge = Instance(g=build(4, 1, [(1, 2, 1)]), s=0, z=3, k=0)
    with pytest.raises(DecompositionMismatch):
        solve_treewidth_dp(with_inner_edge, td)


@given(instance_graphs(max_n=6, max_tau=3))
@settings(max_examples=80, deadline=None)
def test_matches_oracle(g):
    inst = Instance(g=g, s=0, z=g.n - 1, k=g.n)
    td = build_tree_decomposition(g.underlying(), 0, g.n - 1)
    found = solve_treewidth_dp(inst, td)
    assert found.size == min_separator_bruteforce(inst).size
    assert is_separator(inst, found.vertices)


def _earliest_arrivals_from(g, start, depart_at_least):
    """Earliest arrival labels for paths leaving `start` at label >= depart_at_least."""
    if depart_at_least > g.tau:
        return {start: 0}
    sliced = g.slice_labels(depart_at_least, g.tau)
    return {
        v: (0 if v == start else a + depart_at_least - 1)
        for v, a in reachable_with_earliest_arrival(sliced, start).items()
    }


def _coloring_is_valid(g, coloring, tau):
    """The global consistency predicate, computed from path sweeps.

    coloring: vertex -> color index (i-1 for A_i, tau for S, tau+1 for Z).
    """
    s_color, z_color = tau, tau + 1
    cut = {v for v, c in coloring.items() if c == s_color}
    reduced, remap = g.delete_vertices(cut)
    for a, ca in coloring.items():
        if ca >= tau:
            continue
        i = ca + 1
        arrivals = _earliest_arrivals_from(reduced, remap[a], i)
        for b, cb in coloring.items():
            if b == a or b in cut:
                continue
            if remap[b] not in arrivals:
                continue
            got = arrivals[remap[b]]
            if got == 0:
                continue  # b == a only
            if cb == z_color:
                return False  # an A_i vertex reaches a Z vertex departing >= i
            j = cb + 1
            if got <= j - 1:
                return False  # reaches an A_j vertex before label j
    return True


def brute_force_min_colorings(g, s, z):
    """min |S| over valid whole-graph colorings, per restriction to a bag."""
    tau = g.tau
    verts = [v for v in range(g.n) if v not in (s, z)]
    results = {}
    for combo in product(range(tau + 2), repeat=len(verts)):
        coloring = dict(zip(verts, combo))
        coloring[s] = 0
        coloring[z] = tau + 1
        if not _coloring_is_valid(g, coloring, tau):
            continue
        size = sum(1 for c in coloring.values() if c == tau)
        key = frozenset(coloring.items())
        if key not in results or size < results[key]:
            results[key] = size
    return results


@pytest.mark.parametrize("seed", [2, 5, 9, 14, 21, 33])
def test_root_table_equals_exhaustive_coloring_minimum(seed):
    from temposep.generators import GenSpec, generate

    inst = generate(GenSpec(n=4 + seed % 2, tau=1 + seed % 3, edge_prob=0.4, seed=seed))
    g = inst.g
    td = build_tree_decomposition(g.underlying(), inst.s, inst.z)
    table = treewidth_root_table(inst, td)
    whole = brute_force_min_colorings(g, inst.s, inst.z)
    root_bag = sorted(td.nodes[td.root].bag)

    # For every root entry: its cost must equal the min over valid global
    # colorings agreeing with it on the root bag (infinite entries absent).
    for entry, cost in table.items():
        entry_map = dict(entry)
        agreeing = [
            size
            for key, size in whole.items()
            if all(dict(key)[v] == entry_map[v] for v in root_bag)
        ]
        assert agreeing, f"finite root entry {entry} has no valid extension"
        assert cost == min(agreeing)

    # And conversely: every valid global coloring's bag restriction is finite.
    for key, size in whole.items():
        restriction = tuple((v, dict(key)[v]) for v in root_bag)
        assert restriction in table
        assert table[restriction] <= size


def test_min_over_root_table_equals_oracle_on_corpus():
    from conftest import random_instances

    for inst in random_instances(40, n_max=7, tau_max=4, seed0=900):
        td = build_tree_decomposition(inst.g.underlying(), inst.s, inst.z)
        table = treewidth_root_table(inst, td)
        tau = inst.g.tau
        finite = [
            cost
            for entry, cost in table.items()
            if dict(entry)[inst.s] == 0 and dict(entry)[inst.z] == tau + 1
        ]
        assert min(finite) == min_separator_bruteforce(inst).size
