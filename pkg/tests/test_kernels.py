import random

import pytest

from zeroforcing import kernels
from zeroforcing.forcing import derived_set
from zeroforcing.graph import from_edges
from zeroforcing.named import mcgee, petersen

BACKENDS = [b for b in kernels.BACKENDS if b != "numba" or kernels.HAVE_NUMBA]


def random_graph(rng, n):
    p = rng.uniform(0.05, 0.7)
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.mark.parametrize("backend", BACKENDS)
def test_closure_matches_reference(backend):
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 70))
        s = rng.sample(range(g.n), rng.randint(0, g.n))
        assert kernels.closure(g, s, backend) == derived_set(g, s)[0]


@pytest.mark.parametrize("backend", BACKENDS)
def test_block_search_agrees_across_backends(backend):
    g = petersen()
    searcher = kernels.BlockSearcher(g, backend)
    status, nodes, witness = searcher.search(5, 0, 10**9)
    assert status == kernels.FOUND and witness[0] == 0 and len(witness) == 5
    assert searcher.search(4, 0, 10**9)[0] == kernels.NOT_FOUND
    assert searcher.search(5, 0, 1)[0] == kernels.BUDGET


def test_backends_explore_identical_trees():
    g = mcgee()
    results = {b: kernels.BlockSearcher(g, b).search(7, 3, 10**9) for b in BACKENDS}
    assert len(set(results.values())) == 1


def test_unknown_backend(monkeypatch):
    monkeypatch.setenv("ZEROFORCING_BACKEND", "fortran")
    with pytest.raises(ValueError):
        kernels.default_backend()
    monkeypatch.setenv("ZEROFORCING_BACKEND", "numpy")
    assert kernels.default_backend() == "numpy"
