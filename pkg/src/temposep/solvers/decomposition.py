"""Nice tree decompositions with both terminals injected into every bag.

The heuristic route eliminates vertices by minimum fill-in, collecting one bag
per eliminated vertex and hanging it under the bag of its first-eliminated
neighbor.  External decompositions are validated instead: occurrence sets must
be non-empty and connected in the tree, and every edge must fit in some bag.
Either way, s and z are then added to every bag and the tree is rewritten into
nice form whose node kinds are leaf ({s,z} exactly), introduce, forget, and
join.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..core import StaticGraph
from ..errors import InvalidDecomposition


@dataclass(frozen=True)
class NiceNode:
    """One node of a nice tree decomposition.

    kind is 'leaf', 'introduce', 'forget', or 'join'; vertex is the
    introduced/forgotten vertex and None otherwise.
    """

    kind: str
    bag: frozenset[int]
    children: tuple[int, ...]
    vertex: Optional[int] = None


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """A rooted nice tree decomposition; width is max bag size minus one."""

    nodes: tuple[NiceNode, ...]
    root: int
    width: int

    def postorder(self) -> list[int]:
        order: list[int] = []
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            node_id, expanded = stack.pop()
            if expanded:
                order.append(node_id)
            else:
                stack.append((node_id, True))
                for child in self.nodes[node_id].children:
                    stack.append((child, False))
        return order


def minfill_tree_decomposition(g: StaticGraph) -> tuple[list[set[int]], list[tuple[int, int]]]:
    """Heuristic bags and tree edges from minimum fill-in elimination."""
    adj: dict[int, set[int]] = {v: set(g.adjacency[v]) for v in range(g.n)}
    elim_pos: dict[int, int] = {}
    bags: list[set[int]] = []
    bag_neighbors: list[set[int]] = []
    while adj:
        best_v, best_cost = -1, None
        for v in sorted(adj):
            nbrs = adj[v]
            cost = sum(
                1
                for a in nbrs
                for b in nbrs
                if a < b and b not in adj[a]
            )
            if best_cost is None or cost < best_cost:
                best_v, best_cost = v, cost
                if cost == 0:
                    break
        nbrs = set(adj[best_v])
        elim_pos[best_v] = len(bags)
        bags.append({best_v} | nbrs)
        bag_neighbors.append(nbrs)
        for a in nbrs:
            for b in nbrs:
                if a != b:
                    adj[a].add(b)
            adj[a].discard(best_v)
        del adj[best_v]
    tree_edges: list[tuple[int, int]] = []
    for i, nbrs in enumerate(bag_neighbors):
        if nbrs:
            parent = min(elim_pos[w] for w in nbrs)
            tree_edges.append((i, parent))
        elif i + 1 < len(bags):
            tree_edges.append((i, i + 1))
    return bags, tree_edges


def validate_tree_decomposition(
    bags: list[set[int]], tree_edges: list[tuple[int, int]], g: StaticGraph
) -> None:
    """Raise InvalidDecomposition naming the first violated property."""
    count = len(bags)
    if count == 0:
        raise InvalidDecomposition("decomposition has no bags")
    for i, bag in enumerate(bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise InvalidDecomposition(f"bag {i} contains out-of-range vertex {v}")
    tree_adj: dict[int, set[int]] = {i: set() for i in range(count)}
    for a, b in tree_edges:
        tree_adj[a].add(b)
        tree_adj[b].add(a)
    if len(tree_edges) != count - 1:
        raise InvalidDecomposition(f"{count} bags need {count - 1} tree edges, got {len(tree_edges)}")
    seen = {0}
    stack = [0]
    while stack:
        for nxt in tree_adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != count:
        raise InvalidDecomposition("bag tree is not connected")
    for v in range(g.n):
        occurrence = {i for i, bag in enumerate(bags) if v in bag}
        if not occurrence:
            raise InvalidDecomposition(f"vertex {v} appears in no bag")
        start = next(iter(occurrence))
        seen_v = {start}
        stack = [start]
        while stack:
            for nxt in tree_adj[stack.pop()]:
                if nxt in occurrence and nxt not in seen_v:
                    seen_v.add(nxt)
                    stack.append(nxt)
        if seen_v != occurrence:
            raise InvalidDecomposition(f"bags containing vertex {v} are not connected in the tree")
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in bags):
            raise InvalidDecomposition(f"edge ({u},{v}) is contained in no bag")


def build_tree_decomposition(
    g: StaticGraph,
    s: int,
    z: int,
    external: Optional[tuple[list[set[int]], list[tuple[int, int]]]] = None,
) -> NiceTreeDecomposition:
    """A nice decomposition of g with s and z injected into every bag.

    external, when given, is a raw (bags, tree edges) pair which is validated
    first; otherwise the min-fill heuristic supplies one.
    """
    if external is not None:
        bags, tree_edges = external
        validate_tree_decomposition(bags, tree_edges, g)
    else:
        bags, tree_edges = minfill_tree_decomposition(g)
        if not bags:  # graphs without vertices still need one bag for {s,z}
            bags, tree_edges = [set()], []
    augmented = [set(bag) | {s, z} for bag in bags]
    return _nicify(augmented, tree_edges, s, z)


def _nicify(bags: list[set[int]], tree_edges: list[tuple[int, int]], s: int, z: int) -> NiceTreeDecomposition:
    tree_adj: dict[int, list[int]] = {i: [] for i in range(len(bags))}
    for a, b in tree_edges:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    nodes: list[NiceNode] = []

    def emit(kind: str, bag: Iterable[int], children: tuple[int, ...], vertex: Optional[int] = None) -> int:
        nodes.append(NiceNode(kind, frozenset(bag), children, vertex))
        return len(nodes) - 1

    base = frozenset((s, z))

    def morph(top: int, have: frozenset[int], want: frozenset[int]) -> int:
        cur, bag = top, have
        for v in sorted(have - want):
            bag = bag - {v}
            cur = emit("forget", bag, (cur,), v)
        for v in sorted(want - have):
            bag = bag | {v}
            cur = emit("introduce", bag, (cur,), v)
        return cur

    def build(raw: int, parent: Optional[int]) -> int:
        bag = frozenset(bags[raw])
        child_raws = [c for c in tree_adj[raw] if c != parent]
        if not child_raws:
            leaf = emit("leaf", base, ())
            return morph(leaf, base, bag)
        tops = [morph(build(c, raw), frozenset(bags[c]), bag) for c in child_raws]
        cur = tops[0]
        for other in tops[1:]:
            cur = emit("join", bag, (cur, other))
        return cur

    root = build(0, None)
    width = max(len(node.bag) for node in nodes) - 1
    return NiceTreeDecomposition(tuple(nodes), root, width)
