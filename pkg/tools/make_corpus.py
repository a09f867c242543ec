"""Regenerate the graph6 corpora under tests/data/.

Development tool only: needs ``pynauty`` for isomorphism-free generation.
With nauty installed, ``geng -c 8`` produces the same connected corpus.

    python tools/make_corpus.py
"""

import itertools
import random
from pathlib import Path

import networkx as nx
import pynauty

from zeroforcing.graph import Graph, connected_components, girth, min_degree
from zeroforcing.graph6 import write_graph6

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"


def certificate(n: int, masks: tuple) -> bytes:
    adj = {v: [u for u in range(n) if (masks[v] >> u) & 1] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical(n: int, masks: tuple) -> tuple:
    """Relabel by nauty's canonical order so output is stable across runs."""
    adj = {v: [u for u in range(n) if (masks[v] >> u) & 1] for v in range(n)}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    pos = {old: new for new, old in enumerate(lab)}
    out = [0] * n
    for v in range(n):
        for u in range(n):
            if (masks[v] >> u) & 1:
                out[pos[v]] |= 1 << pos[u]
    return tuple(out)


def extend(graphs: list, n: int, allowed) -> list:
    """All connected (n+1)-vertex graphs obtained by attaching a new vertex, up to isomorphism."""
    seen = {}
    for masks in graphs:
        for r in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), r):
                if not allowed(masks, nbrs):
                    continue
                new = list(masks) + [0]
                for u in nbrs:
                    new[u] |= 1 << n
                    new[n] |= 1 << u
                new = tuple(new)
                cert = certificate(n + 1, new)
                if cert not in seen:
                    seen[cert] = canonical(n + 1, new)
    return sorted(seen.values())


def connected_upto(nmax: int, allowed=lambda masks, nbrs: True) -> dict:
    levels = {1: [(0,)]}
    for n in range(1, nmax):
        levels[n + 1] = extend(levels[n], n, allowed)
    return levels


def far_apart(masks, nbrs) -> bool:
    """New vertex keeps girth >= 5: its neighbors are pairwise at distance >= 3."""
    for a, b in itertools.combinations(nbrs, 2):
        if (masks[a] >> b) & 1 or masks[a] & masks[b]:
            return False
    return True


def write(name: str, graphs) -> None:
    path = DATA / name
    path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    print(f"{name}: {len(graphs)} graphs")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)

    levels = connected_upto(8)
    connected = [Graph(n, m) for n in sorted(levels) for m in levels[n]]
    write("connected_n1_8.g6", connected)
    write("connected_n1_8_mindeg2.g6", [g for g in connected if g.n >= 3 and min_degree(g) >= 2])

    levels5 = connected_upto(10, far_apart)
    high = [Graph(n, m) for n in sorted(levels5) for m in levels5[n]]
    high = [g for g in high if g.n >= 5 and min_degree(g) >= 2 and girth(g).at_least(5)]
    write("girth5_mindeg2_n10.g6", high)

    rng = random.Random(20240917)
    sample = []
    while len(sample) < 600:
        n = rng.choice([5, 6, 7, 8, 9, 9, 9])
        p = rng.uniform(0.15, 0.85)
        G = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
        if nx.is_connected(G):
            g = Graph(n, [sum(1 << u for u in G[v]) for v in range(n)])
            assert len(connected_components(g)) == 1
            sample.append(g)
    write("oracle_sample_n9.g6", sample)


if __name__ == "__main__":
    main()
