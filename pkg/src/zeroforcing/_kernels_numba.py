"""Compiled kernels over packed ``uint64`` adjacency rows.

All kernels release the GIL so solver blocks can run on threads.
"""

import numpy as np
from numba import njit

ZERO = np.uint64(0)
ONE = np.uint64(1)

NOT_FOUND = 0
FOUND = 1
BUDGET = 2


@njit(inline="always")
def _test(words, v):
    return (words[v >> 6] >> np.uint64(v & 63)) & ONE != ZERO


@njit(inline="always")
def _set(words, v):
    words[v >> 6] |= ONE << np.uint64(v & 63)


@njit(inline="always")
def _ctz(x):
    i = 0
    while (x & ONE) == ZERO:
        x >>= ONE
        i += 1
    return i


@njit(cache=True, nogil=True)
def closure_inplace(rows, black, queue, queued):
    """Grow ``black`` to its derived set using a worklist of candidate forcers."""
    n, nwords = rows.shape
    head = 0
    size = 0
    for v in range(n):
        queued[v] = False
        if _test(black, v):
            queue[size] = v
            size += 1
            queued[v] = True
    while size > 0:
        v = queue[head]
        head = head + 1 if head + 1 < n else 0
        size -= 1
        queued[v] = False
        target = -1
        for w in range(nwords):
            x = rows[v, w] & ~black[w]
            if x != ZERO:
                if target != -1 or (x & (x - ONE)) != ZERO:
                    target = -2
                    break
                target = w * 64 + _ctz(x)
        if target < 0:
            continue
        _set(black, target)
        # the forced vertex and its black neighbors lost a white neighbor
        for w in range(nwords):
            x = rows[target, w] & black[w]
            if w == target >> 6:
                x |= ONE << np.uint64(target & 63)
            while x != ZERO:
                u = w * 64 + _ctz(x)
                x &= x - ONE
                if not queued[u]:
                    queued[u] = True
                    tail = head + size
                    queue[tail - n if tail >= n else tail] = u
                    size += 1


@njit(cache=True, nogil=True)
def _is_full(words, full):
    for w in range(words.shape[0]):
        if words[w] != full[w]:
            return False
    return True


@njit(cache=True, nogil=True)
def closure(rows, black):
    n = rows.shape[0]
    out = black.copy()
    closure_inplace(rows, out, np.empty(n, np.int64), np.zeros(n, np.bool_))
    return out


@njit(cache=True, nogil=True)
def search_block(rows, full, k, first, budget, chosen):
    """Depth-first search over ``k``-sets whose smallest vertex is ``first``.

    Sets are visited in lexicographic order. A vertex already inside the
    closure of the current prefix is never added. Returns
    ``(status, nodes, size)``; on FOUND, ``chosen[:size]`` is the set.
    """
    n, nwords = rows.shape
    stack = np.zeros((k, nwords), dtype=np.uint64)
    nxt = np.zeros(k, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    queued = np.zeros(n, dtype=np.bool_)

    chosen[0] = first
    _set(stack[0], first)
    closure_inplace(rows, stack[0], queue, queued)
    nodes = 1
    if _is_full(stack[0], full):
        return FOUND, nodes, 1
    if k == 1 or nodes >= budget:
        return (BUDGET if k > 1 else NOT_FOUND), nodes, 0

    d = 1
    nxt[1] = first + 1
    while d >= 1:
        limit = n - (k - d)
        v = nxt[d]
        while v <= limit and _test(stack[d - 1], v):
            v += 1
        if v > limit:
            d -= 1
            continue
        nxt[d] = v + 1
        chosen[d] = v
        for w in range(nwords):
            stack[d, w] = stack[d - 1, w]
        _set(stack[d], v)
        closure_inplace(rows, stack[d], queue, queued)
        nodes += 1
        if _is_full(stack[d], full):
            return FOUND, nodes, d + 1
        if nodes >= budget:
            return BUDGET, nodes, 0
        if d + 1 < k:
            d += 1
            nxt[d] = v + 1
    return NOT_FOUND, nodes, 0
