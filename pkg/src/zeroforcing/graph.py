"""Immutable simple graphs on vertices ``0..n-1``.

Neighborhoods are kept twice: as Python integer bitmasks (cheap set algebra
in the pure-Python code paths) and as packed ``uint64`` rows consumed by the
compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AcyclicGraphError, GraphError

WORD = 64


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Girth:
    """Girth of a graph: a finite cycle length, or ``length=None`` for forests."""

    length: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return self.length is not None

    @property
    def value(self) -> int:
        if self.length is None:
            raise AcyclicGraphError("graph is acyclic; girth is undefined")
        return self.length

    def at_least(self, k: int) -> bool:
        """True when every cycle has length >= k (vacuously for forests)."""
        return self.length is None or self.length >= k

    def to_json(self) -> Optional[int]:
        return self.length

    def __str__(self) -> str:
        return "acyclic" if self.length is None else str(self.length)


ACYCLIC = Girth(None)


class Graph:
    """Simple undirected graph with a fixed vertex count.

    Instances are immutable; the numpy row array is marked read-only.
    """

    __slots__ = ("n", "masks", "edge_count", "_rows", "_matrix", "_degrees", "_girth")

    def __init__(self, n: int, masks: Sequence[int]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if len(masks) != n:
            raise GraphError("one neighbor mask per vertex required")
        masks = tuple(int(m) for m in masks)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if (m >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(m):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", masks)
        degrees = tuple(m.bit_count() for m in masks)
        object.__setattr__(self, "_degrees", degrees)
        object.__setattr__(self, "edge_count", sum(degrees) // 2)
        object.__setattr__(self, "_rows", None)
        object.__setattr__(self, "_matrix", None)
        object.__setattr__(self, "_girth", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self.masks[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- kernel views --------------------------------------------------

    @property
    def rows(self) -> np.ndarray:
        """Adjacency as packed ``uint64`` words, shape ``(n, ceil(n/64))``."""
        if self._rows is None:
            words = max(1, -(-self.n // WORD))
            rows = np.zeros((self.n, words), dtype=np.uint64)
            for v, m in enumerate(self.masks):
                for w in range(words):
                    rows[v, w] = (m >> (WORD * w)) & 0xFFFFFFFFFFFFFFFF
            rows.setflags(write=False)
            object.__setattr__(self, "_rows", rows)
        return self._rows

    @property
    def matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (read-only)."""
        if self._matrix is None:
            mat = np.zeros((self.n, self.n), dtype=bool)
            for u, v in self.edges():
                mat[u, v] = mat[v, u] = True
            mat.setflags(write=False)
            object.__setattr__(self, "_matrix", mat)
        return self._matrix

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def __reduce__(self):
        return (Graph, (self.n, self.masks))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate and reversed pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    masks = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def girth(g: Graph) -> Girth:
    """Exact girth: level-by-level breadth-first search from every vertex.

    From a root, an edge inside level d closes a walk of length 2d + 1 and a
    vertex with two parents in level d one of length 2d + 2; each such walk
    contains a cycle, and a root on a shortest cycle finds exactly its length.
    """
    if g._girth is not None:
        return g._girth
    best = None
    masks = g.masks
    for root in range(g.n):
        visited = frontier = 1 << root
        depth = 0
        while frontier:
            if best is not None and 2 * depth + 1 >= best:
                break
            if any(masks[v] & frontier for v in iter_bits(frontier)):
                best = 2 * depth + 1
                break
            nxt = twice = 0
            for v in iter_bits(frontier):
                fresh = masks[v] & ~visited
                twice |= nxt & fresh
                nxt |= fresh
            if twice:
                best = 2 * depth + 2
                break
            visited |= nxt
            frontier = nxt
            depth += 1
    result = ACYCLIC if best is None else Girth(best)
    object.__setattr__(g, "_girth", result)
    return result


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("min degree of the empty graph is undefined")
    return min(g.degrees)


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    g._check(u)
    g._check(v)
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return set(iter_bits(g.masks[u] & g.masks[v]))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = 0
    comps = []
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        comp = 1 << root
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices`` (relabelled in increasing order) and the old->new map."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    masks = []
    for v in keep:
        m = 0
        for w in iter_bits(g.masks[v]):
            if w in index:
                m |= 1 << index[w]
        masks.append(m)
    return Graph(len(keep), masks), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
