import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforcing.forcing import (
    Chronology,
    ColorState,
    ForceEvent,
    closure_mask,
    derived_set,
    eligible_forces,
    is_zero_forcing_set,
    replay,
)
from zeroforcing.graph import from_edges, mask_of
from zeroforcing.named import complete, cycle, path


@st.composite
def graph_and_sets(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = from_edges(n, edges)
    a = draw(st.sets(st.integers(0, n - 1)))
    b = draw(st.sets(st.integers(0, n - 1)))
    return g, a, b


def test_eligible_forces_examples():
    assert eligible_forces(cycle(5), ColorState(cycle(5), frozenset({0, 1}))) == [(0, 4), (1, 2)]
    assert eligible_forces(complete(4), {0, 1}) == []
    assert eligible_forces(cycle(5), range(5)) == []


def test_derived_set_on_five_cycle():
    closure, chron = derived_set(cycle(5), {0, 1})
    assert closure == frozenset(range(5))
    assert [(e.forcer, e.forced) for e in chron.events] == [(0, 4), (1, 2), (2, 3)]
    assert chron.forcers == [0, 1, 2] and chron.t == 3


def test_stalled_closure():
    closure, chron = derived_set(cycle(5), {0})
    assert closure == {0} and chron.t == 0


def test_path_from_an_end():
    closure, chron = derived_set(path(4), {0})
    assert closure == frozenset(range(4)) and chron.t == 3


def test_zero_forcing_examples():
    assert is_zero_forcing_set(cycle(7), {0, 1})
    assert not is_zero_forcing_set(cycle(7), {0, 3})
    assert is_zero_forcing_set(complete(5), {1, 2, 3, 4})
    assert not is_zero_forcing_set(complete(5), {1, 2, 3})


def test_replay_rejects_bad_chronologies():
    g = cycle(5)
    _, chron = derived_set(g, {0, 1})
    assert replay(g, chron) == frozenset(range(5))
    bad = Chronology(frozenset({0, 1}), (ForceEvent(2, 3, 0),))
    with pytest.raises(ValueError):
        replay(g, bad)
    double = Chronology(frozenset({0, 1}), (ForceEvent(0, 4, 0), ForceEvent(0, 4, 1)))
    with pytest.raises(ValueError):
        replay(g, double)


@settings(max_examples=300, deadline=None)
@given(graph_and_sets())
def test_closure_properties(case):
    g, a, b = case
    ca, chron = derived_set(g, a)
    assert a <= ca
    assert derived_set(g, ca)[0] == ca
    assert ca <= derived_set(g, a | b)[0]
    assert replay(g, chron) == ca
    assert closure_mask(g, mask_of(a)) == mask_of(ca)


def random_order_closure(g, s, rng):
    black = set(s)
    while True:
        moves = eligible_forces(g, black)
        if not moves:
            return frozenset(black)
        black.add(rng.choice(moves)[1])


@settings(max_examples=200, deadline=None)
@given(graph_and_sets(), st.integers(0, 2**32 - 1))
def test_closure_is_order_independent(case, seed):
    g, a, _ = case
    assert random_order_closure(g, a, random.Random(seed)) == derived_set(g, a)[0]
