"""Pure-numpy fallback for the compiled kernels.

Same contract as ``_kernels_numba`` but works on a dense ``int32``
adjacency matrix and boolean color vectors. Closure here is round-parallel
(all eligible forces in one vectorized step); the derived set is the same.
"""

import numpy as np

NOT_FOUND = 0
FOUND = 1
BUDGET = 2


def closure(adj: np.ndarray, black: np.ndarray) -> np.ndarray:
    black = black.copy()
    while True:
        white = ~black
        white_counts = adj @ white.astype(np.int32)
        forcers = black & (white_counts == 1)
        if not forcers.any():
            return black
        black |= (adj[forcers] != 0).any(axis=0) & white


def search_block(adj: np.ndarray, k: int, first: int, budget: int, chosen: np.ndarray):
    n = adj.shape[0]
    stack = [None] * k
    nxt = [0] * k

    start = np.zeros(n, dtype=bool)
    start[first] = True
    chosen[0] = first
    stack[0] = closure(adj, start)
    nodes = 1
    if stack[0].all():
        return FOUND, nodes, 1
    if k == 1 or nodes >= budget:
        return (BUDGET if k > 1 else NOT_FOUND), nodes, 0

    d = 1
    nxt[1] = first + 1
    while d >= 1:
        limit = n - (k - d)
        prev = stack[d - 1]
        v = nxt[d]
        while v <= limit and prev[v]:
            v += 1
        if v > limit:
            d -= 1
            continue
        nxt[d] = v + 1
        chosen[d] = v
        cur = prev.copy()
        cur[v] = True
        stack[d] = closure(adj, cur)
        nodes += 1
        if stack[d].all():
            return FOUND, nodes, d + 1
        if nodes >= budget:
            return BUDGET, nodes, 0
        if d + 1 < k:
            d += 1
            nxt[d] = v + 1
    return NOT_FOUND, nodes, 0
