import pytest

from zeroforcing.errors import OracleRefused
from zeroforcing.forcing import is_zero_forcing_set
from zeroforcing.graph import Graph, from_edges
from zeroforcing.named import complete, complete_bipartite, cycle, heawood, hypercube, path, petersen
from zeroforcing.solver import (
    SolveResult,
    SolverConfig,
    brute_force_oracle,
    greedy_forcing_set,
    minimum_zero_forcing_sets,
    seed_lower_bound,
    verify_witness,
    zero_forcing_number,
)


@pytest.mark.parametrize(
    "g, z",
    [(petersen(), 5), (heawood(), 6), (complete_bipartite(3, 3), 4), (path(5), 1), (hypercube(3), 4)],
)
def test_solver_examples(g, z):
    res = zero_forcing_number(g)
    assert res.exact and res.z == z
    assert verify_witness(g, res)


@pytest.mark.parametrize("g, z", [(cycle(6), 2), (complete(5), 4), (Graph(1, [0]), 1)])
def test_oracle_examples(g, z):
    assert brute_force_oracle(g).z == z


def test_oracle_refuses_large_graphs():
    with pytest.raises(OracleRefused):
        brute_force_oracle(cycle(13))


def test_witness_is_lexicographically_least():
    g = petersen()
    assert zero_forcing_number(g).witness == next(minimum_zero_forcing_sets(g))


def test_disconnected_graphs_sum_components():
    g = from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    res = zero_forcing_number(g)
    assert res.z == 2 + 2 + 1 + 1
    assert verify_witness(g, res)
    assert [r.z for r in res.per_component] == [2, 2, 1, 1]


def test_worker_counts_give_identical_results():
    for g in (petersen(), heawood(), hypercube(4)):
        one = zero_forcing_number(g, SolverConfig(worker_count=1))
        four = zero_forcing_number(g, SolverConfig(worker_count=4))
        assert one.to_json() == four.to_json()


def test_start_lower_bound_above_the_truth_is_reported():
    with pytest.raises(AssertionError):
        zero_forcing_number(cycle(6), SolverConfig(start_lower_bound=3))


def test_budget_gives_an_interval():
    g = heawood()
    res = zero_forcing_number(g, SolverConfig(node_budget=3, start_lower_bound=1))
    assert not res.exact and res.z is None
    assert res.lower <= 6 <= res.upper
    assert verify_witness(g, res)


def test_seed_bound_and_greedy():
    assert seed_lower_bound(petersen()) == 5
    assert seed_lower_bound(path(4)) == 1
    s = greedy_forcing_set(heawood())
    assert is_zero_forcing_set(heawood(), s)


def test_verify_witness_cases():
    assert not verify_witness(cycle(5), SolveResult(1, (0,)))
    assert verify_witness(Graph(1, [0]), SolveResult(1, (0,)))
    assert not verify_witness(cycle(5), SolveResult(2, (0, 0)))
    assert not verify_witness(cycle(5), SolveResult(2, (0, 7)))


def test_minimum_sets_match_exhaustive_listing():
    import itertools

    g = hypercube(3)
    listed = list(minimum_zero_forcing_sets(g, 4))
    brute = [s for s in itertools.combinations(range(8), 4) if is_zero_forcing_set(g, s)]
    assert listed == brute


@pytest.mark.parametrize("kwargs", [{"worker_count": 0}, {"node_budget": 0}, {"start_lower_bound": 0}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def test_numpy_backend_solves():
    assert zero_forcing_number(petersen(), SolverConfig(backend="numpy")).z == 5
