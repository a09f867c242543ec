import itertools
import random

import networkx as nx
import pytest

from zeroforcing.errors import Graph6Error
from zeroforcing.graph import Graph, from_edges
from zeroforcing.graph6 import parse_graph6, parse_line, parse_sparse6, write_graph6
from zeroforcing.named import complete, heawood


def all_five_vertex_codes():
    pairs = list(itertools.combinations(range(5), 2))
    for bits in range(1 << len(pairs)):
        yield from_edges(5, [p for t, p in enumerate(pairs) if bits >> t & 1])


def test_k2_encoding():
    assert write_graph6(complete(2)) == "A_"


def test_known_string_round_trips():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert write_graph6(g) == "D?{"
    ref = nx.from_graph6_bytes(b"D?{")
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())


def test_header_accepted():
    assert parse_graph6(">>graph6<<A_") == complete(2)


def test_every_five_vertex_graph_matches_reference_decoder():
    for g in all_five_vertex_codes():
        text = write_graph6(g)
        assert parse_graph6(text) == g
        ref = nx.from_graph6_bytes(text.encode())
        assert sorted(tuple(sorted(e)) for e in ref.edges()) == g.edges()


def test_encoder_agrees_with_reference_on_larger_graphs():
    rng = random.Random(11)
    for n in (0, 1, 62, 63, 64, 100):
        G = nx.gnp_random_graph(n, 0.3, seed=rng.randrange(1 << 30))
        g = from_edges(n, G.edges())
        assert write_graph6(g) == nx.to_graph6_bytes(G, header=False).decode().strip()


@pytest.mark.parametrize("text", ["", "A", "A_?", "D?{ x", "A\x7f", ":Fa@x^"])
def test_malformed_inputs(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_sparse6():
    G = nx.Graph(heawood().edges())
    text = nx.to_sparse6_bytes(G, header=False).decode().strip()
    assert parse_sparse6(text) == heawood()
    assert parse_line(text) == heawood()
    assert parse_line(write_graph6(heawood())) == heawood()


def test_empty_graph():
    assert parse_graph6("?") == Graph(0, [])
