"""Exhaustive ground-truth computations, intended for desk-scale inputs.

These enumerations favor obviousness over speed: they are the reference
answers that every solver backend and instance transformation is checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .core import TemporalGraph
from .errors import (
    NotAPath,
    OracleScaleError,
    TerminalEdgePresent,
    TerminalInSeparator,
    VertexOutOfRange,
)
from .reachability import find_temporal_path

BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class Instance:
    """A separation query: graph, two terminals, and a deletion budget.

    Construction rejects a time-edge between the terminals, which the
    problem definition forbids.
    """

    g: TemporalGraph
    s: int
    z: int
    k: int

    def __post_init__(self) -> None:
        for v in (self.s, self.z):
            if not (0 <= v < self.g.n):
                raise VertexOutOfRange(f"terminal {v} outside 0..{self.g.n - 1}")
        if self.s == self.z:
            raise VertexOutOfRange(f"terminals must be distinct, both are {self.s}")
        if self.k < 0:
            raise ValueError(f"budget must be non-negative, got {self.k}")
        pair = (min(self.s, self.z), max(self.s, self.z))
        if pair in self.g.edge_labels:
            raise TerminalEdgePresent(
                f"time-edge between terminals {self.s} and {self.z} at labels {self.g.edge_labels[pair]}"
            )

    def with_budget(self, k: int) -> "Instance":
        return replace(self, k=k)


@dataclass(frozen=True)
class Separator:
    """A vertex set whose deletion removes all temporal (s,z)-paths."""

    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


def is_separator(inst: Instance, candidate: Iterable[int], strict: bool = False) -> bool:
    """Whether deleting `candidate` leaves no temporal (s,z)-path."""
    cut = frozenset(candidate)
    if inst.s in cut or inst.z in cut:
        raise TerminalInSeparator(f"candidate contains a terminal: {sorted(cut & {inst.s, inst.z})}")
    reduced, remap = inst.g.delete_vertices(cut)
    return find_temporal_path(reduced, remap[inst.s], remap[inst.z], strict) is None


def min_separator_bruteforce(inst: Instance, strict: bool = False, max_n: int = BRUTE_FORCE_MAX_N) -> Separator:
    """A minimum separator by subset enumeration, smallest size then lexicographic.

    Always succeeds: with no time-edge between the terminals, deleting every
    other vertex separates.  Deterministic.
    """
    if inst.g.n > max_n:
        raise OracleScaleError(f"brute force on {inst.g.n} vertices exceeds the guard of {max_n}")
    others = [v for v in range(inst.g.n) if v not in (inst.s, inst.z)]
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            if is_separator(inst, subset, strict):
                return Separator(frozenset(subset))
    raise AssertionError("unreachable: deleting all non-terminals always separates")


def enumerate_temporal_paths(
    g: TemporalGraph, s: int, z: int, strict: bool = False
) -> Iterable[tuple[tuple[int, int, int], ...]]:
    """Yield every temporal (s,z)-path as a tuple of oriented (from, to, t) steps.

    Pure depth-first enumeration of label-monotone, vertex-disjoint
    time-edge sequences; the independent oracle for path existence.
    """
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for e in g.edges:
        incident[e.u].append((e.v, e.t))
        incident[e.v].append((e.u, e.t))

    def extend(cur: int, last_t: int, visited: set[int], steps: list[tuple[int, int, int]]):
        for nxt, t in incident[cur]:
            if nxt in visited:
                continue
            if t < last_t or (strict and steps and t <= last_t):
                continue
            steps.append((cur, nxt, t))
            if nxt == z:
                yield tuple(steps)
            else:
                visited.add(nxt)
                yield from extend(nxt, t, visited, steps)
                visited.remove(nxt)
            steps.pop()

    yield from extend(s, 0, {s}, [])


def temporal_path_exists_exhaustive(g: TemporalGraph, s: int, z: int, strict: bool = False) -> bool:
    for _ in enumerate_temporal_paths(g, s, z, strict):
        return True
    return False


def _edge_labels_along(g: TemporalGraph, p: Sequence[int]) -> list[tuple[int, ...]]:
    if len(p) == 0:
        raise NotAPath("empty vertex sequence")
    if len(set(p)) != len(p):
        raise NotAPath(f"vertex sequence revisits a vertex: {list(p)}")
    labels = []
    for a, b in zip(p, p[1:]):
        pair = (min(a, b), max(a, b))
        if pair not in g.edge_labels:
            raise NotAPath(f"({a},{b}) is not an underlying edge")
        labels.append(g.edge_labels[pair])
    return labels


def path_min_resets(g: TemporalGraph, p: Sequence[int]) -> int:
    """Minimum number of monotone-run breaks over all label realizations of p.

    Greedy: take the smallest available label >= the current one; when none
    exists, reset to the smallest available label and count one break.  The
    greedy choice keeps the running label minimal, which is verified against
    exhaustive search in the test suite.
    """
    breaks = 0
    cur = 0
    for labels in _edge_labels_along(g, p):
        feasible = [t for t in labels if t >= cur]
        if feasible:
            cur = feasible[0]
        else:
            breaks += 1
            cur = labels[0]
    return breaks


def simple_paths(graph_adj: Sequence[Iterable[int]], s: int, z: int) -> Iterable[list[int]]:
    """All simple (s,z)-paths of a static graph given as adjacency lists."""
    path = [s]
    visited = {s}

    def walk(cur: int):
        for nxt in graph_adj[cur]:
            if nxt in visited:
                continue
            path.append(nxt)
            if nxt == z:
                yield list(path)
            else:
                visited.add(nxt)
                yield from walk(nxt)
                visited.remove(nxt)
            path.pop()

    yield from walk(s)


def distance_to_temporality(g: TemporalGraph, s: int, z: int) -> int:
    """Max over underlying simple (s,z)-paths of the minimum reset count.

    0 when no (s,z)-path exists.  Enumerates simple paths, so only suitable
    at desk scale.
    """
    under = g.underlying()
    adj = [sorted(under.adjacency[v]) for v in range(g.n)]
    best = 0
    for p in simple_paths(adj, s, z):
        best = max(best, path_min_resets(g, p))
    return best
