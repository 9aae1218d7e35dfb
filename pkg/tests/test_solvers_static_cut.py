from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from temposep import static_min_vertex_cut
from temposep.core import StaticGraph, static_graph
from temposep.errors import TerminalsAdjacent


def test_four_cycle():
    g = static_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert sorted(static_min_vertex_cut(g, 0, 2)) == [1, 3]


def test_path_has_unique_cut_vertex():
    g = static_graph(3, [(0, 1), (1, 2)])
    assert sorted(static_min_vertex_cut(g, 0, 2)) == [1]


def test_disconnected_terminals():
    g = static_graph(4, [(0, 1), (2, 3)])
    assert static_min_vertex_cut(g, 0, 3) == frozenset()


def test_adjacent_terminals_rejected():
    g = static_graph(2, [(0, 1)])
    with pytest.raises(TerminalsAdjacent):
        static_min_vertex_cut(g, 0, 1)


def _separates(g: StaticGraph, s: int, z: int, cut) -> bool:
    blocked = set(cut)
    seen, stack = {s}, [s]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in blocked and w not in seen:
                seen.add(w)
                stack.append(w)
    return z not in seen


def _brute_min_cut_size(g: StaticGraph, s: int, z: int) -> int:
    others = [v for v in range(g.n) if v not in (s, z)]
    for size in range(len(others) + 1):
        if any(_separates(g, s, z, sub) for sub in combinations(others, size)):
            return size
    raise AssertionError


def _vertex_disjoint_path_count(g: StaticGraph, s: int, z: int) -> int:
    """max number of internally vertex-disjoint (s,z)-paths, by exhaustion."""
    best = 0

    def paths_from(used: frozenset, count: int):
        nonlocal best
        best = max(best, count)
        found = []

        # enumerate one more simple path avoiding `used`, then try each
        def walk(cur, visited):
            if cur == z:
                found.append(frozenset(visited) - {s, z})
                return
            for w in sorted(g.adjacency[cur]):
                if w not in visited and w not in used:
                    walk(w, visited | {w})

        walk(s, {s})
        for interior in found:
            paths_from(used | interior, count + 1)

    paths_from(frozenset(), 0)
    return best


@st.composite
def small_static(draw):
    n = draw(st.integers(3, 8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, n - 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return static_graph(n, chosen)


@given(small_static())
@settings(max_examples=60, deadline=None)
def test_cut_is_minimum_and_separating(g):
    cut = static_min_vertex_cut(g, 0, g.n - 1)
    assert _separates(g, 0, g.n - 1, cut)
    assert len(cut) == _brute_min_cut_size(g, 0, g.n - 1)


@given(small_static())
@settings(max_examples=25, deadline=None)
def test_duality_with_disjoint_paths(g):
    if len(g.edges) > 12:  # keep the exhaustive path packing tractable
        return
    cut = static_min_vertex_cut(g, 0, g.n - 1)
    assert len(cut) == _vertex_disjoint_path_count(g, 0, g.n - 1)
