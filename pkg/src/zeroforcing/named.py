"""Constructors for the standard graph families used as tight cases."""

from __future__ import annotations

import re

from .errors import GraphError
from .graph import Graph, from_edges


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _positive(n)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _positive(n)
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _positive(a)
    _positive(b)
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    _positive(d)
    n = 1 << d
    return from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def lcf(n: int, shifts: list[int], repeats: int) -> Graph:
    """Hamiltonian cycle ``0..n-1`` plus chords from an LCF code."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    pattern = shifts * repeats
    if len(pattern) != n:
        raise GraphError("LCF pattern length must equal n")
    for i, s in enumerate(pattern):
        edges.append((i, (i + s) % n))
    return from_edges(n, edges)


def petersen() -> Graph:
    # outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def mcgee() -> Graph:
    return lcf(24, [12, 7, -7], 8)


def _positive(n: int) -> None:
    if n < 1:
        raise GraphError(f"size must be positive, got {n}")


_CONSTRUCTORS = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "heawood": (heawood, 0),
    "mcgee": (mcgee, 0),
}

KNOWN_NAMES = tuple(_CONSTRUCTORS)

_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*([0-9,\s-]*)\)|:([0-9,-]+))?\s*$")


def named_graph(spec: str) -> Graph:
    """Build a graph from a name such as ``petersen``, ``cycle(9)`` or ``complete_bipartite:3,3``."""
    m = _SPEC_RE.match(spec.lower())
    if not m or m.group(1) not in _CONSTRUCTORS:
        raise KeyError(f"unknown graph {spec!r}; known: {', '.join(KNOWN_NAMES)}")
    name, raw = m.group(1), m.group(2) if m.group(2) is not None else m.group(3)
    func, arity = _CONSTRUCTORS[name]
    args = [int(a) for a in raw.split(",") if a.strip()] if raw else []
    if len(args) != arity:
        raise GraphError(f"{name} takes {arity} integer argument(s), got {len(args)}")
    return func(*args)
