"""Readers and writers for the on-disk text formats.

Temporal graph (.tg):
    tg <n> <tau>
    <u> <v> <t>        one time-edge per line, ASCII decimal, single spaces
Lines starting with '#' and blank lines are ignored.  The loader
canonicalizes; the writer emits sorted canonical order with LF endings.

Tree decomposition (.td):
    td <num_bags> <max_bag_size> <n>
    b <id> <v...>      one line per bag, ids 1..num_bags
    <id> <id>          one line per tree edge

Ordering file: a single line of n whitespace-separated distinct vertices.
"""

from __future__ import annotations

import os
from typing import TextIO

from .core import TemporalGraph, build
from .errors import FormatError, NotAPermutation


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_tg(text: str, path: str = "<string>") -> TemporalGraph:
    lines = _meaningful_lines(text)
    if not lines:
        raise FormatError("empty file, expected 'tg <n> <tau>' header", path)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "tg":
        raise FormatError(f"bad header {header!r}, expected 'tg <n> <tau>'", path, lineno)
    try:
        n, tau = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"non-integer header fields in {header!r}", path, lineno) from None
    triples = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"bad edge line {line!r}, expected '<u> <v> <t>'", path, lineno)
        try:
            u, v, t = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"non-integer edge fields in {line!r}", path, lineno) from None
        triples.append((u, v, t))
    try:
        return build(n, tau, triples)
    except Exception as exc:
        raise FormatError(str(exc), path) from exc


def load_tg(path: str | os.PathLike) -> TemporalGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_tg(fh.read(), str(path))


def format_tg(g: TemporalGraph) -> str:
    lines = [f"tg {g.n} {g.tau}"]
    lines.extend(f"{e.u} {e.v} {e.t}" for e in g.edges)
    return "\n".join(lines) + "\n"


def dump_tg(g: TemporalGraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_tg(g))


def parse_td(text: str, path: str = "<string>") -> tuple[list[set[int]], list[tuple[int, int]], int]:
    """Parse a .td file into (bags, tree edges, n); bag ids are rebased to 0."""
    lines = _meaningful_lines(text)
    if not lines:
        raise FormatError("empty file, expected 'td <num_bags> <max_bag_size> <n>' header", path)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "td":
        raise FormatError(f"bad header {header!r}, expected 'td <num_bags> <max_bag_size> <n>'", path, lineno)
    try:
        num_bags, max_bag, n = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError:
        raise FormatError(f"non-integer header fields in {header!r}", path, lineno) from None
    bags: list[set[int] | None] = [None] * num_bags
    tree_edges: list[tuple[int, int]] = []
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            if parts[0] == "b":
                bag_id = int(parts[1])
                if not (1 <= bag_id <= num_bags):
                    raise FormatError(f"bag id {bag_id} outside 1..{num_bags}", path, lineno)
                if bags[bag_id - 1] is not None:
                    raise FormatError(f"duplicate bag id {bag_id}", path, lineno)
                verts = {int(p) for p in parts[2:]}
                bags[bag_id - 1] = verts
            elif len(parts) == 2:
                a, b = int(parts[0]), int(parts[1])
                if not (1 <= a <= num_bags and 1 <= b <= num_bags):
                    raise FormatError(f"tree edge ({a},{b}) references unknown bag", path, lineno)
                tree_edges.append((a - 1, b - 1))
            else:
                raise FormatError(f"unrecognized line {line!r}", path, lineno)
        except (ValueError, IndexError):
            raise FormatError(f"unrecognized line {line!r}", path, lineno) from None
    out_bags: list[set[int]] = []
    for i, bag in enumerate(bags):
        if bag is None:
            raise FormatError(f"bag {i + 1} never declared", path)
        if len(bag) > max_bag:
            raise FormatError(f"bag {i + 1} has {len(bag)} vertices, header allows {max_bag}", path)
        out_bags.append(bag)
    return out_bags, tree_edges, n


def load_td(path: str | os.PathLike) -> tuple[list[set[int]], list[tuple[int, int]], int]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_td(fh.read(), str(path))


def parse_ordering(text: str, n: int, path: str = "<string>") -> tuple[int, ...]:
    try:
        order = tuple(int(p) for p in text.split())
    except ValueError:
        raise FormatError("ordering file must contain only integers", path) from None
    if sorted(order) != list(range(n)):
        raise NotAPermutation(f"{path}: ordering is not a permutation of 0..{n - 1}")
    return order


def load_ordering(path: str | os.PathLike, n: int) -> tuple[int, ...]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_ordering(fh.read(), n, str(path))
