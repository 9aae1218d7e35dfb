"""Detectors for temporal graph classes and the peak reduction rule.

Layer-sequence shape (monotone runs and their peaks), periodicity, steadiness,
and window connectivity are all read off the layer edge sets.  The monotone
detector resolves the segment definition as per-interval uniform direction:
each of the p segments is entirely inclusion-non-decreasing or entirely
inclusion-non-increasing.  Equal consecutive layers count as both directions;
they never start a new segment and never create a peak.  With the per-step
reading, a single segment would cover any comparable sequence and the peak
notion would collapse.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .core import TemporalGraph, from_layers
from .errors import NotAPermutation, NotMonotone
from .oracle import Instance


@dataclass(frozen=True)
class MonotoneShape:
    """Monotone segment count p and the peak labels (1-based, time order)."""

    p: int
    peaks: tuple[int, ...]


@dataclass(frozen=True)
class ClassProfile:
    """All four class detections for one temporal graph.

    monotone is None when some consecutive layer pair is incomparable.
    periodic satisfies p * r = tau with p minimal.  steady_lambda is the
    largest symmetric difference of consecutive layer edge sets (0 when
    tau <= 1).  interval_connected_max_t is the largest T for which every
    length-T window has a connected edge-set intersection, 0 if some layer
    is already disconnected.
    """

    monotone: Optional[MonotoneShape]
    periodic_p: int
    periodic_r: int
    steady_lambda: int
    interval_connected_max_t: int

    @property
    def single_peaked(self) -> bool:
        return self.monotone is not None and len(self.monotone.peaks) == 1


def _compress_layers(g: TemporalGraph) -> tuple[list[int], list[frozenset]]:
    """Collapse consecutive equal layers; returns (first labels, edge sets)."""
    labels: list[int] = []
    sets: list[frozenset] = []
    for idx, es in enumerate(g.layer_edge_sets):
        if not sets or es != sets[-1]:
            labels.append(idx + 1)
            sets.append(es)
    return labels, sets


def _detect_monotone(g: TemporalGraph) -> Optional[MonotoneShape]:
    labels, sets = _compress_layers(g)
    dirs: list[int] = []  # +1 growing, -1 shrinking, between compressed layers
    for a, b in zip(sets, sets[1:]):
        if a < b:
            dirs.append(+1)
        elif a > b:
            dirs.append(-1)
        else:
            return None  # incomparable
    runs = 1
    for d, d_next in zip(dirs, dirs[1:]):
        if d != d_next:
            runs += 1
    peaks = [
        labels[m]
        for m in range(len(sets))
        if (m == 0 or dirs[m - 1] == +1) and (m == len(dirs) or dirs[m] == -1)
    ]
    return MonotoneShape(p=runs, peaks=tuple(peaks))


def _detect_periodic(g: TemporalGraph) -> tuple[int, int]:
    sets = g.layer_edge_sets
    tau = g.tau
    for p in range(1, tau + 1):
        if tau % p != 0:
            continue
        if all(sets[j] == sets[j % p] for j in range(tau)):
            return p, tau // p
    return tau, 1


def _detect_steady(g: TemporalGraph) -> int:
    sets = g.layer_edge_sets
    return max((len(a ^ b) for a, b in zip(sets, sets[1:])), default=0)


def _window_connected(g: TemporalGraph, window: int) -> bool:
    sets = g.layer_edge_sets
    for start in range(g.tau - window + 1):
        common = frozenset.intersection(*sets[start : start + window])
        if not _connected_on_all(g.n, common):
            return False
    return True


def _connected_on_all(n: int, pairs: frozenset[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _detect_interval_connected(g: TemporalGraph) -> int:
    best = 0
    for window in range(1, g.tau + 1):
        if not _window_connected(g, window):
            break
        best = window
    return best


def classify(g: TemporalGraph) -> ClassProfile:
    """Run all four class detectors on one graph."""
    if g.tau == 0:
        return ClassProfile(MonotoneShape(0, ()), 0, 0, 0, 0)
    p, r = _detect_periodic(g)
    return ClassProfile(
        monotone=_detect_monotone(g),
        periodic_p=p,
        periodic_r=r,
        steady_lambda=_detect_steady(g),
        interval_connected_max_t=_detect_interval_connected(g),
    )


def reduce_to_peaks(inst: Instance) -> Instance:
    """Shrink a monotone instance to its peak layers, preserving the answer.

    Every non-peak layer is a subset of an adjacent peak layer, so deleting
    it (and renumbering) changes no separator.
    """
    shape = classify(inst.g).monotone
    if shape is None:
        raise NotMonotone("graph has an incomparable consecutive layer pair")
    sets = inst.g.layer_edge_sets
    g2 = from_layers(inst.g.n, (sets[t - 1] for t in shape.peaks))
    return replace(inst, g=g2)


class OrderViolation(NamedTuple):
    """An indifference failure: positions i < j < k (0-based) in some layer."""

    layer: int
    i: int
    j: int
    k: int


class OrderCheck(NamedTuple):
    ok: bool
    violation: Optional[OrderViolation]


def check_order_compatible(g: TemporalGraph, ordering: tuple[int, ...]) -> OrderCheck:
    """Whether every layer satisfies the indifference property under `ordering`.

    ordering[i] is the vertex at position i.  The property: whenever
    positions i < j < k have the edge (i,k) in a layer, that layer also has
    (i,j) and (j,k).  It characterizes unit-interval layers whose interval
    positions are monotone in the ordering.
    """
    if sorted(ordering) != list(range(g.n)):
        raise NotAPermutation(f"ordering is not a permutation of 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(ordering)}
    for t_idx, pairs in enumerate(g.layer_edge_sets):
        by_pos = {tuple(sorted((pos[u], pos[v]))) for u, v in pairs}
        for i, k in sorted(by_pos):
            for j in range(i + 1, k):
                if (i, j) not in by_pos or (j, k) not in by_pos:
                    return OrderCheck(False, OrderViolation(t_idx + 1, i, j, k))
    return OrderCheck(True, None)
