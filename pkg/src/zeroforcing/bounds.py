"""Girth/degree lower bound and extremal edge counts for graphs of large girth."""

from __future__ import annotations

from .errors import AcyclicGraphError, BoundDomainError, OracleRefused
from .graph import Girth, Graph

EXTREMAL_MAX_N = 8


def davila_kenter_bound(g, delta: int) -> int:
    """delta + (delta - 2)(g - 3): lower bound on Z for girth g >= 3, min degree >= 2.

    ``g`` may be an int or a :class:`Girth`; an acyclic girth is rejected.
    """
    if isinstance(g, Girth):
        if not g.is_finite:
            raise AcyclicGraphError("the bound needs a finite girth; graph is a forest")
        g = g.value
    if g is None:
        raise AcyclicGraphError("the bound needs a finite girth; graph is a forest")
    if g < 3:
        raise BoundDomainError(f"girth must be >= 3, got {g}")
    if delta < 2:
        raise BoundDomainError(f"minimum degree must be >= 2, got {delta}")
    return delta + (delta - 2) * (g - 3)


def min_order_bound(g: int, delta: int) -> int:
    """g(delta - 1): fewest vertices of a graph with girth g >= 5 and min degree delta."""
    if isinstance(g, Girth):
        g = g.value
    if g < 5:
        raise BoundDomainError(f"order bound needs girth >= 5, got {g}")
    if delta < 2:
        raise BoundDomainError(f"minimum degree must be >= 2, got {delta}")
    return g * (delta - 1)


def mantel_ex(n: int) -> int:
    """Most edges in a triangle-free graph on n vertices."""
    if n < 1:
        raise BoundDomainError(f"n must be positive, got {n}")
    return n * n // 4


def abajo_dianez_ex(n: int, ell: int) -> int:
    """Most edges on n vertices with no cycle of length <= ell.

    Only defined on the window ell >= 4, ell + 1 <= n <= 2 ell.
    """
    if ell < 4:
        raise BoundDomainError(f"formula needs ell >= 4, got {ell}")
    if not ell + 1 <= n <= 2 * ell:
        raise BoundDomainError(f"formula only covers ell+1 <= n <= 2*ell (= {ell + 1}..{2 * ell}), got n={n}")
    if n <= 3 * ell // 2:
        return n
    if n <= 2 * ell - 1:
        return n + 1
    return n + 2


def extremal_bruteforce(n: int, ell: int) -> tuple[int, Graph]:
    """Exhaustive maximum edge count over labelled graphs on n <= 8 vertices with girth >= ell + 1.

    Edges are tried in a fixed order; an edge is added only if it closes no
    cycle of length <= ell. Returns the maximum and the first graph reaching it.
    """
    if n > EXTREMAL_MAX_N:
        raise OracleRefused(f"extremal enumeration refuses n={n} > {EXTREMAL_MAX_N}")
    if n < 1:
        raise BoundDomainError(f"n must be positive, got {n}")
    if ell < 3:
        raise BoundDomainError(f"ell must be >= 3, got {ell}")

    pairs = [(u, v) for v in range(n) for u in range(v)]
    total = len(pairs)
    masks = [0] * n
    best = [-1, None]

    def closes_short_cycle(u: int, v: int) -> bool:
        # is v within distance ell - 1 of u?
        seen = 1 << u
        frontier = 1 << u
        for _ in range(ell - 1):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            if (frontier >> v) & 1:
                return True
            if not frontier:
                return False
            seen |= frontier
        return False

    def dfs(i: int, count: int) -> None:
        if count > best[0]:
            best[0] = count
            best[1] = tuple(masks)
        if count + (total - i) <= best[0]:
            return
        for j in range(i, total):
            if count + (total - j) <= best[0]:
                return
            u, v = pairs[j]
            if closes_short_cycle(u, v):
                continue
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            dfs(j + 1, count + 1)
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u

    dfs(0, 0)
    return best[0], Graph(n, best[1])
