"""Exact zero forcing number with a verifiable witness.

The search runs iterative deepening on the set size ``k``. For a fixed
``k`` the candidate sets are split into blocks by their smallest vertex;
blocks are searched depth-first in lexicographic order and never add a
vertex that the current prefix already forces. That pruning is exact: a
minimum zero forcing set never contains a vertex forced by the rest of it.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bounds import davila_kenter_bound
from .errors import GraphError, OracleRefused
from .forcing import closure_mask, is_zero_forcing_set
from .graph import Graph, connected_components, girth, induced_subgraph, min_degree
from .kernels import BUDGET, FOUND, BlockSearcher

ORACLE_MAX_N = 12
NO_BUDGET = 1 << 62


@dataclass(frozen=True)
class SolverConfig:
    start_lower_bound: Optional[int] = None
    node_budget: Optional[int] = None
    worker_count: int = 1
    backend: Optional[str] = None

    def __post_init__(self):
        if self.start_lower_bound is not None and self.start_lower_bound < 1:
            raise ValueError("start_lower_bound must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


@dataclass
class SolveResult:
    """Outcome of a solve.

    When ``exact`` is false the node budget ran out: ``z`` is None and the
    answer lies in ``[lower, upper]``, with ``witness`` a forcing set of
    size ``upper``.
    """

    z: Optional[int]
    witness: tuple[int, ...]
    nodes_explored: int = 0
    lower_bound_used: int = 1
    exact: bool = True
    lower: int = 0
    upper: int = 0
    per_component: list = field(default_factory=list)

    def __post_init__(self):
        if self.exact:
            self.lower = self.upper = self.z

    def to_json(self) -> dict:
        return {
            "z": self.z,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "witness": list(self.witness),
            "nodes_explored": self.nodes_explored,
            "lower_bound_used": self.lower_bound_used,
        }


def seed_lower_bound(g: Graph) -> int:
    """Girth lower bound for connected ``g`` when it applies, else max(1, min degree)."""
    if g.n <= 1:
        return 1
    delta = min_degree(g)
    gr = girth(g)
    if gr.is_finite and delta >= 2:
        return davila_kenter_bound(gr.value, delta)
    return max(1, delta)


def greedy_forcing_set(g: Graph) -> tuple[int, ...]:
    """A (not necessarily minimum) zero forcing set: repeatedly add the vertex whose addition forces most."""
    black = 0
    chosen = []
    full = g.full_mask
    while black != full:
        best_v, best = -1, -1
        for v in range(g.n):
            if (black >> v) & 1:
                continue
            size = closure_mask(g, black | (1 << v)).bit_count()
            if size > best:
                best_v, best = v, size
        chosen.append(best_v)
        black = closure_mask(g, black | (1 << best_v))
    return tuple(sorted(chosen))


def _solve_connected(g: Graph, cfg: SolverConfig, budget: int) -> SolveResult:
    n = g.n
    if n == 1:
        return SolveResult(1, (0,), nodes_explored=1, lower_bound_used=1)
    lb = seed_lower_bound(g)
    if cfg.start_lower_bound is not None:
        lb = max(lb, cfg.start_lower_bound)
    lb = min(lb, n)
    searcher = BlockSearcher(g, cfg.backend)
    nodes = 0
    pool = ThreadPoolExecutor(cfg.worker_count) if cfg.worker_count > 1 else None
    try:
        for k in range(lb, n + 1):
            status, used, witness = _search_size(searcher, n, k, budget - nodes, pool)
            nodes += used
            if status == FOUND:
                if len(witness) < k:
                    raise AssertionError(
                        f"found a forcing set of size {len(witness)} below the lower bound {k}: {witness}"
                    )
                return SolveResult(k, witness, nodes_explored=nodes, lower_bound_used=lb)
            if status == BUDGET:
                upper = greedy_forcing_set(g)
                return SolveResult(None, upper, nodes_explored=nodes, lower_bound_used=lb,
                                   exact=False, lower=k, upper=len(upper))
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    raise AssertionError("no zero forcing set found; the whole vertex set always forces")


def _search_size(searcher: BlockSearcher, n: int, k: int, budget: int, pool):
    """Search all ``k``-sets. Blocks are combined in first-vertex order, so the
    reported witness and node count do not depend on the worker count."""
    firsts = range(0, n - k + 1)
    if pool is None:
        nodes = 0
        for first in firsts:
            if budget - nodes <= 0:
                return BUDGET, nodes, None
            status, used, witness = searcher.search(k, first, budget - nodes)
            nodes += used
            if status != 0:
                return status, nodes, witness
        return 0, nodes, None

    # every block gets the full remaining budget; the ordered reduction below
    # charges blocks in sequence, which matches the sequential accounting
    futures = [pool.submit(searcher.search, k, first, budget) for first in firsts]
    nodes = 0
    try:
        for fut in futures:
            status, used, witness = fut.result()
            if status == BUDGET or nodes + used > budget or (nodes + used == budget and status != FOUND):
                return BUDGET, min(nodes + used, budget), None
            nodes += used
            if status == FOUND:
                return FOUND, nodes, witness
    finally:
        for fut in futures:
            fut.cancel()
    return 0, nodes, None


def zero_forcing_number(g: Graph, cfg: Optional[SolverConfig] = None) -> SolveResult:
    """Exact Z(G). Disconnected graphs are solved per component and summed."""
    cfg = cfg or SolverConfig()
    if g.n < 1:
        raise GraphError("zero forcing number needs at least one vertex")
    budget = cfg.node_budget or NO_BUDGET
    comps = connected_components(g)
    if len(comps) == 1:
        return _solve_connected(g, cfg, budget)

    parts = []
    nodes = 0
    for comp in comps:
        sub, index = induced_subgraph(g, comp)
        back = {new: old for old, new in index.items()}
        remaining = max(1, budget - nodes)
        r = _solve_connected(sub, cfg, remaining)
        nodes += r.nodes_explored
        parts.append((r, [back[v] for v in r.witness]))
    exact = all(r.exact for r, _ in parts)
    witness = tuple(sorted(v for _, w in parts for v in w))
    lower = sum(r.lower for r, _ in parts)
    upper = sum(r.upper for r, _ in parts)
    return SolveResult(
        lower if exact else None,
        witness,
        nodes_explored=nodes,
        lower_bound_used=sum(r.lower_bound_used for r, _ in parts),
        exact=exact,
        lower=lower,
        upper=upper,
        per_component=[r for r, _ in parts],
    )


def brute_force_oracle(g: Graph) -> SolveResult:
    """Plain enumeration of all vertex subsets by size (n <= 12)."""
    if g.n > ORACLE_MAX_N:
        raise OracleRefused(f"brute-force oracle refuses n={g.n} > {ORACLE_MAX_N}")
    if g.n < 1:
        raise GraphError("zero forcing number needs at least one vertex")
    tried = 0
    for k in range(0, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            tried += 1
            if is_zero_forcing_set(g, s):
                return SolveResult(k, s, nodes_explored=tried, lower_bound_used=0)
    raise AssertionError("unreachable: V is always a zero forcing set")


def verify_witness(g: Graph, result: SolveResult) -> bool:
    w = result.witness
    if len(set(w)) != len(w) or any(not 0 <= v < g.n for v in w):
        return False
    size = result.z if result.exact else result.upper
    return len(w) == size and is_zero_forcing_set(g, w)


def minimum_zero_forcing_sets(g: Graph, z: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every zero forcing set of size ``z`` (default Z(G)), in lexicographic order.

    Uses the same prefix-closure pruning as the solver, which is exact for
    minimum sets. ``z`` must be the true zero forcing number.
    """
    if z is None:
        z = zero_forcing_number(g).z
    n = g.n
    full = g.full_mask

    def extend(prefix: list[int], black: int, start: int):
        depth = len(prefix)
        for v in range(start, n - (z - depth) + 1):
            if (black >> v) & 1:
                continue
            nb = closure_mask(g, black | (1 << v))
            prefix.append(v)
            if depth + 1 == z:
                if nb == full:
                    yield tuple(prefix)
            elif nb != full:
                yield from extend(prefix, nb, v + 1)
            prefix.pop()

    yield from extend([], 0, 0)


def default_worker_count() -> int:
    raw = os.environ.get("ZEROFORCING_WORKERS", "").strip()
    if not raw:
        return 1
    count = int(raw)
    if count < 1:
        raise ValueError("ZEROFORCING_WORKERS must be positive")
    return count

