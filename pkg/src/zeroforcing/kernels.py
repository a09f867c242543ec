"""Backend dispatch for the hot kernels.

``ZEROFORCING_BACKEND=numpy`` forces the pure-numpy path; the default is
numba when it imports, numpy otherwise.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional

import numpy as np

from . import _kernels_numpy
from .graph import WORD, Graph, iter_bits, mask_of

try:
    from . import _kernels_numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernels_numba = None
    HAVE_NUMBA = False

NOT_FOUND = 0
FOUND = 1
BUDGET = 2

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    name = os.environ.get("ZEROFORCING_BACKEND", "").strip().lower()
    if name in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"ZEROFORCING_BACKEND must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise ImportError("ZEROFORCING_BACKEND=numba but numba is not importable")
    return name


def _resolve(backend: Optional[str]) -> str:
    return default_backend() if backend is None else backend


def _words(g: Graph, mask: int) -> np.ndarray:
    nwords = g.rows.shape[1]
    return np.array([(mask >> (WORD * w)) & 0xFFFFFFFFFFFFFFFF for w in range(nwords)], dtype=np.uint64)


def _adj_int(g: Graph) -> np.ndarray:
    return g.matrix.astype(np.int32)


def closure(g: Graph, vertices: Iterable[int], backend: Optional[str] = None) -> frozenset:
    """Derived set of ``vertices`` computed by the selected kernel."""
    backend = _resolve(backend)
    m = mask_of(vertices)
    if backend == "numba":
        out = _kernels_numba.closure(g.rows, _words(g, m))
        mask = 0
        for w, word in enumerate(out):
            mask |= int(word) << (WORD * w)
        return frozenset(iter_bits(mask))
    black = np.zeros(g.n, dtype=bool)
    black[list(iter_bits(m))] = True
    return frozenset(np.flatnonzero(_kernels_numpy.closure(_adj_int(g), black)).tolist())


class BlockSearcher:
    """Runs first-vertex blocks of the size-``k`` search on one graph."""

    def __init__(self, g: Graph, backend: Optional[str] = None):
        self.g = g
        self.backend = _resolve(backend)
        if self.backend == "numba":
            self._rows = np.ascontiguousarray(g.rows)
            self._full = _words(g, g.full_mask)
        else:
            self._adj = _adj_int(g)

    def search(self, k: int, first: int, budget: int) -> tuple[int, int, Optional[tuple[int, ...]]]:
        """Return ``(status, nodes, witness)``; ``witness`` is set only on FOUND."""
        chosen = np.zeros(max(k, 1), dtype=np.int64)
        if self.backend == "numba":
            status, nodes, size = _kernels_numba.search_block(self._rows, self._full, k, first, budget, chosen)
        else:
            status, nodes, size = _kernels_numpy.search_block(self._adj, k, first, budget, chosen)
        witness = tuple(int(v) for v in chosen[:size]) if status == FOUND else None
        return int(status), int(nodes), witness
