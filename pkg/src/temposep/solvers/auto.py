"""Backend dispatch from detected structure.

Order of the rules, most specific first:

1. single-peaked layer sequence: the one peak layer dominates every other,
   so temporal separation equals static separation in the underlying graph.
2. all layers identical (period 1): same collapse.
3. periodic with at least as many periods as vertices: any underlying
   (s,z)-path splits into at most n-1 monotone label runs, and with one
   period per run it realizes as a temporal path, so the static cut is
   exact.
4. periodic with more periods than the measured distance to temporality of
   the period block: same run-per-period argument (d breaks need d+1
   periods); the measurement enumerates simple paths and is therefore only
   attempted at desk scale.
5. a compatible vertex ordering was supplied: interval DP.
6. a tree decomposition was supplied and its coloring-table size estimate
   fits the work cap: treewidth DP.
7. otherwise: budget-bounded search tree.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from ..classes import check_order_compatible, classify
from ..oracle import Instance, Separator, distance_to_temporality
from .decomposition import NiceTreeDecomposition
from .interval_dp import solve_interval_dp
from .search_tree import solve_search_tree
from .static_cut import static_min_vertex_cut
from .treewidth_dp import solve_treewidth_dp

DEFAULT_WORK_CAP = 10**8
DISTANCE_PROBE_MAX_N = 9


class AutoResult(NamedTuple):
    separator: Optional[Separator]  # None when nothing fits the budget
    backend: str


def treewidth_work_estimate(td: NiceTreeDecomposition, tau: int) -> int:
    """Pessimistic cell count: (tau+2)^(width+2) colorings per bag, all bags."""
    return (tau + 2) ** (td.width + 2) * len(td.nodes)


def _static_cut_result(inst: Instance) -> Optional[Separator]:
    cut = static_min_vertex_cut(inst.g.underlying(), inst.s, inst.z)
    return Separator(cut) if len(cut) <= inst.k else None


def solve_auto(
    inst: Instance,
    ordering: Optional[Sequence[int]] = None,
    td: Optional[NiceTreeDecomposition] = None,
    work_cap: int = DEFAULT_WORK_CAP,
) -> AutoResult:
    """Solve the (non-strict) instance with the cheapest applicable backend."""
    profile = classify(inst.g)
    if profile.single_peaked:
        return AutoResult(_static_cut_result(inst), "static-cut")
    if profile.periodic_p in (0, 1):
        return AutoResult(_static_cut_result(inst), "static-cut")
    if profile.periodic_r >= inst.g.n:
        return AutoResult(_static_cut_result(inst), "static-cut")
    if inst.g.n <= DISTANCE_PROBE_MAX_N:
        block = inst.g.slice_labels(1, profile.periodic_p)
        # d breaks need d+1 periods, one monotone run each.
        if profile.periodic_r >= distance_to_temporality(block, inst.s, inst.z) + 1:
            return AutoResult(_static_cut_result(inst), "static-cut")
    if ordering is not None and check_order_compatible(inst.g, tuple(ordering)).ok:
        return AutoResult(solve_interval_dp(inst, ordering), "interval-dp")
    if td is not None and treewidth_work_estimate(td, inst.g.tau) <= work_cap:
        return AutoResult(solve_treewidth_dp(inst, td), "treewidth-dp")
    return AutoResult(solve_search_tree(inst), "search-tree")
