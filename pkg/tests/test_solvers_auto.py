import pytest
from conftest import random_instances

from temposep import (
    Instance,
    build,
    build_tree_decomposition,
    classify,
    from_layers,
    is_separator,
    min_separator_bruteforce,
    power,
    solve_auto,
)
from temposep.generators import GenSpec, MonotoneConstraint, generate


def test_single_peaked_dispatches_to_static_cut():
    a = [(0, 1), (1, 3), (0, 2), (2, 3)]
    g = from_layers(4, [a, a + [(1, 2)], a])
    inst = Instance(g=g, s=0, z=3, k=2)
    result = solve_auto(inst)
    assert result.backend == "static-cut"
    assert result.separator.size == min_separator_bruteforce(inst).size


def test_one_layer_dispatches_to_static_cut():
    g = build(4, 1, [(0, 1, 1), (1, 3, 1), (0, 2, 1), (2, 3, 1)])
    inst = Instance(g=g, s=0, z=3, k=2)
    result = solve_auto(inst)
    assert result.backend == "static-cut"
    assert result.separator.size == 2


def test_identical_layers_dispatch_to_static_cut():
    layer = [(0, 1), (1, 2), (2, 3)]
    g = from_layers(4, [layer, layer, layer])
    inst = Instance(g=g, s=0, z=3, k=1)
    result = solve_auto(inst)
    assert result.backend == "static-cut"
    assert result.separator is not None


def test_many_periods_dispatch_to_static_cut(g1):
    tiled = power(g1, g1.n + 1)
    inst = Instance(g=tiled, s=0, z=3, k=2)
    profile = classify(tiled)
    assert profile.periodic_r >= tiled.n
    result = solve_auto(inst)
    assert result.backend == "static-cut"
    assert result.separator.size == min_separator_bruteforce(inst).size


def test_few_periods_does_not_collapse(g1):
    """Two periods of the g1 block change the answer; the dispatcher must
    not use the static cut here (its minimum is 2, the true minimum 1)."""
    inst = Instance(g=g1, s=0, z=3, k=1)
    result = solve_auto(inst)
    assert result.backend == "search-tree"
    assert result.separator is not None and result.separator.size == 1


def _forced_reset_path_graph():
    """Path 0-1-2-3-4 with labels 1,2,1,2: its one underlying path needs a
    label descent, so no static-collapse rule applies (distance 1, period 1)."""
    return build(5, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 2)])


def test_ordering_hint_dispatches_to_interval_dp():
    inst = Instance(g=_forced_reset_path_graph(), s=0, z=4, k=1)
    result = solve_auto(inst, ordering=(0, 1, 2, 3, 4))
    assert result.backend == "interval-dp"
    assert result.separator.size == min_separator_bruteforce(inst).size


def test_incompatible_ordering_hint_falls_through():
    g = build(4, 2, [(0, 2, 1), (1, 3, 2)])
    inst = Instance(g=g, s=0, z=3, k=1)
    result = solve_auto(inst, ordering=(0, 1, 2, 3))
    assert result.backend != "interval-dp"


def test_td_hint_dispatches_to_treewidth_dp():
    g = _forced_reset_path_graph()
    inst = Instance(g=g, s=0, z=4, k=1)
    td = build_tree_decomposition(g.underlying(), 0, 4)
    result = solve_auto(inst, td=td)
    assert result.backend == "treewidth-dp"
    assert result.separator.size == min_separator_bruteforce(inst).size


def test_td_hint_over_cap_falls_back_to_search_tree():
    g = _forced_reset_path_graph()
    inst = Instance(g=g, s=0, z=4, k=1)
    td = build_tree_decomposition(g.underlying(), 0, 4)
    result = solve_auto(inst, td=td, work_cap=1)
    assert result.backend == "search-tree"


def test_generic_instance_without_hints_uses_search_tree(g1):
    assert solve_auto(Instance(g=g1, s=0, z=3, k=1)).backend == "search-tree"


@pytest.mark.parametrize("inst", random_instances(30, n_max=6, tau_max=3, seed0=4000))
def test_backend_agreement_with_oracle(inst):
    """Whatever backend auto picks must reproduce the oracle verdict."""
    best = min_separator_bruteforce(inst)
    yes = solve_auto(inst.with_budget(best.size))
    assert yes.separator is not None and yes.separator.size <= best.size
    assert is_separator(inst, yes.separator.vertices)
    if best.size > 0:
        no = solve_auto(inst.with_budget(best.size - 1))
        assert no.separator is None


@pytest.mark.parametrize("seed", range(10))
def test_monotone_corpus_agreement(seed):
    inst = generate(
        GenSpec(n=5, tau=4, edge_prob=0.4, constraint=MonotoneConstraint(1), seed=seed)
    )
    best = min_separator_bruteforce(inst)
    result = solve_auto(inst.with_budget(best.size))
    assert result.backend == "static-cut"  # single-peaked
    assert result.separator.size == best.size


@pytest.mark.parametrize("seed", range(25))
def test_all_applicable_backends_agree(seed):
    """On identity-compatible instances, every backend finds the same size."""
    from temposep import check_order_compatible, solve_interval_dp, solve_search_tree, solve_treewidth_dp
    from temposep.generators import UnitIntervalConstraint

    inst = generate(
        GenSpec(n=5 + seed % 3, tau=1 + seed % 4, edge_prob=0.45,
                constraint=UnitIntervalConstraint(), seed=9000 + seed)
    )
    assert check_order_compatible(inst.g, tuple(range(inst.g.n))).ok
    oracle_size = min_separator_bruteforce(inst).size
    # At exactly the oracle budget, a bounded backend's witness is minimum.
    inst = inst.with_budget(oracle_size)
    td = build_tree_decomposition(inst.g.underlying(), inst.s, inst.z)
    found = {
        "interval": solve_interval_dp(inst, tuple(range(inst.g.n))),
        "treewidth": solve_treewidth_dp(inst, td),
        "search-tree": solve_search_tree(inst),
        "auto": solve_auto(inst).separator,
    }
    assert {sep.size for sep in found.values()} == {oracle_size}, found
    for sep in found.values():
        assert is_separator(inst, sep.vertices)
