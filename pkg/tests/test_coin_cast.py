"""Coin casting: coined walks <-> graph-phased Szegedy walks"""
import json

import numpy as np
import pytest

from api.config import settings
from api.errors import DimensionLimit, DimensionMismatch, IncompatibleSupport, NotCastable, NotUnitary
from api.services.coins import (
    CoinSet,
    LemmaClass,
    cast_coin,
    cast_to_szegedy,
    check_double_castability,
    coin_set_from_dict,
    coin_set_to_dict,
    grover_coin,
    hadamard_coin,
    line_coin_set,
    load_coin_set,
    minus_identity_coin,
    ntilde_coin,
    pauli_x_coin,
    szegedy_to_coins,
)
from api.services.graphs import (
    H_LEFT,
    H_RIGHT,
    AdjacencyMatrix,
    TransitionMatrix,
    complete_graph,
    cycle_graph,
    ntilde_line,
)
from api.services.walk import PhaseConfig
from tests.conftest import A4, max_diff


def complete_adjacency(n):
    return AdjacencyMatrix(a=np.ones((n, n), dtype=int) - np.eye(n, dtype=int))


def random_castable_instance(rng, n):
    """Random chain supported on a random connected graph with self-loops"""
    a = (rng.random((n, n)) < 0.5).astype(int)
    a = np.triu(a) | np.triu(a, 1).T
    np.fill_diagonal(a, 1)
    idx = np.arange(n)
    a[idx, (idx + 1) % n] = 1
    a[(idx + 1) % n, idx] = 1
    adjacency = AdjacencyMatrix(a=a)

    weights = np.where(a.T == 1, rng.uniform(0.2, 1.0, size=(n, n)), 0.0)
    g = TransitionMatrix(g=weights / weights.sum(axis=0, keepdims=True))
    phases = PhaseConfig(
        apr=rng.uniform(0.2, 2 * np.pi - 0.2, size=n),
        link=np.where(a == 1, rng.uniform(0.0, 2 * np.pi, size=(n, n)), 0.0),
    )
    return g, phases, adjacency


# single coins

def test_pauli_x_line_is_standard():
    """X coins cast to the unbiased line with standard phases"""
    coins, adjacency = line_coin_set(lambda i: pauli_x_coin(), 8)
    result = cast_to_szegedy(coins, adjacency)
    assert result.lemma_class == LemmaClass.STANDARD
    np.testing.assert_allclose(result.g.g, cycle_graph(8).g, atol=1e-10)
    np.testing.assert_allclose(result.phases.apr, np.full(8, np.pi), atol=1e-10)


def test_hadamard_line_is_standard_and_biased():
    """Hadamard coins jump right with probability 1/(4 - 2 sqrt 2)"""
    coins, adjacency = line_coin_set(lambda i: hadamard_coin(), 8)
    result = cast_to_szegedy(coins, adjacency)
    assert result.lemma_class == LemmaClass.STANDARD
    assert abs(result.g.g[1, 0] - 1 / (4 - 2 * np.sqrt(2))) < 1e-10
    assert abs(result.g.g[7, 0] - H_LEFT ** 2) < 1e-10
    assert abs(result.g.g[1, 0] - H_RIGHT ** 2) < 1e-10


def test_ntilde_line_is_graph_phased():
    """N~ coins give theta = pi/2 and leftward link phase pi/2"""
    coins, adjacency = line_coin_set(lambda i: ntilde_coin(), 8)
    result = cast_to_szegedy(coins, adjacency)
    assert result.lemma_class == LemmaClass.GRAPH_PHASED
    expected_g, expected_phases = ntilde_line(8)
    np.testing.assert_allclose(result.g.g, expected_g.g, atol=1e-10)
    np.testing.assert_allclose(result.phases.apr, np.full(8, np.pi / 2), atol=1e-10)
    for i in range(8):
        assert abs(result.phases.link[i, (i - 1) % 8] - np.pi / 2) < 1e-10
        assert abs(result.phases.link[i, (i + 1) % 8]) < 1e-10


def test_minus_identity_not_castable():
    """-1 coins cannot be cast into a single step"""
    coins = CoinSet.from_adjacency([minus_identity_coin(3)] * 4, complete_adjacency(4))
    with pytest.raises(NotCastable) as excinfo:
        cast_to_szegedy(coins, complete_adjacency(4))
    assert excinfo.value.node == 0
    assert len(excinfo.value.eigenvalues) == 3


def test_grover_coin_is_standard():
    """Grover coins on K_5 cast to the complete graph chain"""
    adjacency = complete_adjacency(5)
    result = cast_to_szegedy(CoinSet.from_adjacency([grover_coin(4)] * 5, adjacency), adjacency)
    assert result.lemma_class == LemmaClass.STANDARD
    np.testing.assert_allclose(result.g.g, complete_graph(5).g, atol=1e-10)


def test_vertex_phased_class():
    """Real eigenvectors with theta != pi are vertex-phased"""
    g = cycle_graph(6)
    phases = PhaseConfig(apr=np.full(6, 1.0), link=np.zeros((6, 6)))
    adjacency = AdjacencyMatrix.backbone(g)
    result = cast_to_szegedy(szegedy_to_coins(g, phases, adjacency), adjacency)
    assert result.lemma_class == LemmaClass.VERTEX_PHASED


def test_link_phased_class():
    """theta = pi with link phases is link-phased"""
    g = cycle_graph(6)
    link = np.zeros((6, 6))
    for i in range(6):
        link[i, (i + 1) % 6] = 0.7
    adjacency = AdjacencyMatrix.backbone(g)
    coins = szegedy_to_coins(g, PhaseConfig(apr=np.full(6, np.pi), link=link), adjacency)
    assert cast_to_szegedy(coins, adjacency).lemma_class == LemmaClass.LINK_PHASED


def test_cast_coin_determinant(rng):
    """det C = (-1)^d e^{i theta} for castable coins"""
    for _ in range(50):
        g, phases, adjacency = random_castable_instance(rng, 6)
        coins = szegedy_to_coins(g, phases, adjacency)
        for coin in coins.coins:
            theta, _ = cast_coin(coin, 1e-8)
            d = coin.shape[0]
            assert abs(np.linalg.det(coin) - (-1) ** d * np.exp(1j * theta)) < 1e-9


def test_cast_gauge_fixed():
    """The first nonzero eigenvector amplitude is real and positive"""
    _, omega = cast_coin(ntilde_coin(), 1e-8)
    assert abs(omega[0].imag) < 1e-12 and omega[0].real > 0


def test_coins_invariant_under_row_gauge(rng):
    """Shifting every link phase of one node by a constant leaves its coin unchanged"""
    g, phases, adjacency = random_castable_instance(rng, 7)
    shift = rng.uniform(0, 2 * np.pi, size=7)
    shifted = phases.with_link(np.where(adjacency.a == 1, phases.link + shift[:, None], 0.0))
    a = szegedy_to_coins(g, phases, adjacency)
    b = szegedy_to_coins(g, shifted, adjacency)
    for ca, cb in zip(a.coins, b.coins):
        assert max_diff(ca, cb) < 1e-12


def test_round_trip_random_instances(rng):
    """Casting coins built from a walk reproduces the walk and the coins"""
    for _ in range(100):
        n = int(rng.integers(3, 9))
        g, phases, adjacency = random_castable_instance(rng, n)
        coins = szegedy_to_coins(g, phases, adjacency)
        result = cast_to_szegedy(coins, adjacency)
        assert max_diff(result.g.g, g.g) < 1e-8
        assert np.max(np.abs(np.angle(np.exp(1j * (result.phases.apr - phases.apr))))) < 1e-8
        back = szegedy_to_coins(result.g, result.phases, adjacency)
        for c0, c1 in zip(coins.coins, back.coins):
            assert max_diff(c0, c1) < 1e-8


# szegedy_to_coins

def test_szegedy_to_coins_incompatible_support(g4):
    """G4 has mass on 1 -> 0 so the adjacency needs that edge"""
    adjacency = AdjacencyMatrix.from_edges(4, [(0, 2), (1, 2), (2, 3)], self_loops=[0, 3])
    with pytest.raises(IncompatibleSupport):
        szegedy_to_coins(g4, PhaseConfig.standard(4), adjacency)


def test_szegedy_to_coins_ghost_edges(g4):
    """Edges with no probability in one direction stay in the coin space"""
    coins = szegedy_to_coins(g4, PhaseConfig.standard(4), AdjacencyMatrix(a=A4))
    assert coins.coins[1].shape == (2, 2)
    assert coins.neighbor_order[1] == (0, 2)


# coin sets

def test_coin_set_rejects_non_unitary():
    """Coins must be unitary"""
    with pytest.raises(NotUnitary):
        CoinSet(coins=(np.array([[1.0, 1.0], [0.0, 1.0]]),), neighbor_order=((0, 0),))


def test_coin_set_neighbor_order_must_match():
    """Neighbor lists are permutations of the adjacency rows"""
    adjacency = complete_adjacency(3)
    coins = CoinSet(coins=(pauli_x_coin(),) * 3, neighbor_order=((1, 2), (0, 2), (0, 0)))
    with pytest.raises(DimensionMismatch):
        coins.validate_against(adjacency)


def test_line_coin_set_order():
    """Right-pointing edge first, across the wraparound too"""
    coins, _ = line_coin_set(lambda i: hadamard_coin(), 5)
    assert coins.neighbor_order[0] == (1, 4)
    assert coins.neighbor_order[4] == (0, 3)


def test_coin_file_round_trip(tmp_path):
    """The coin JSON format reloads to the same coin set"""
    coins, adjacency = line_coin_set(lambda i: ntilde_coin(), 6)
    path = tmp_path / "coins.json"
    path.write_text(json.dumps(coin_set_to_dict(coins, adjacency)))
    loaded, loaded_adjacency = load_coin_set(str(path))
    assert loaded.neighbor_order == coins.neighbor_order
    np.testing.assert_array_equal(loaded_adjacency.a, adjacency.a)
    for a, b in zip(loaded.coins, coins.coins):
        assert max_diff(a, b) == 0.0


def test_coin_dict_default_order():
    """Entries without neighbors use ascending order"""
    data = {
        "n": 2,
        "edges": [[0, 1]],
        "self_loops": [],
        "coins": [{"node": 0, "matrix": [[[-1, 0]]]}, {"node": 1, "matrix": [[-1]]}],
    }
    coins, _ = coin_set_from_dict(data)
    assert coins.neighbor_order == ((1,), (0,))


# double castability

def test_double_castability_complete_graph():
    """Grover coins with -1 on marked nodes match the absorbing double step"""
    n = 8
    adjacency = complete_adjacency(n)
    coins = [grover_coin(n - 1)] * n
    coins[3] = minus_identity_coin(n - 1)
    coins[5] = minus_identity_coin(n - 1)
    report = check_double_castability(CoinSet.from_adjacency(coins, adjacency), adjacency)
    assert report.status == "equivalent"
    assert report.marked_nodes == [3, 5]
    assert report.max_double_diff < 1e-10
    for k in (3, 5):
        assert abs(report.self_loop_phases[k] - (-1)) < 1e-12
    np.testing.assert_array_equal(report.absorbing_chain.g[:, 3], np.eye(n)[3])


def test_double_castability_undetermined():
    """Coins that are neither castable nor -1 leave the check undetermined"""
    adjacency = complete_adjacency(3)
    coins = [grover_coin(2), np.diag([1.0, 1j]).astype(complex), grover_coin(2)]
    report = check_double_castability(CoinSet.from_adjacency(coins, adjacency), adjacency)
    assert report.status == "undetermined"
    assert report.undetermined_node == 1


def test_double_castability_unmarked_grover():
    """Grover coins without marks are trivially equivalent"""
    adjacency = complete_adjacency(5)
    report = check_double_castability(CoinSet.from_adjacency([grover_coin(4)] * 5, adjacency), adjacency)
    assert report.status == "equivalent"
    assert report.marked_nodes == []
    assert report.single_step_max_diff < 1e-10


def test_double_castability_respects_oracle_limit(monkeypatch):
    """Coin sets larger than the dense oracle allows are refused up front"""
    monkeypatch.setattr(settings, "oracle_max_nodes", 4)
    adjacency = complete_adjacency(5)
    with pytest.raises(DimensionLimit):
        check_double_castability(CoinSet.from_adjacency([grover_coin(4)] * 5, adjacency), adjacency)


def test_szegedy_to_coins_cycle_gives_pauli_x():
    """Uniform 2-regular chain with standard phases has X coins"""
    g = cycle_graph(6)
    coins = szegedy_to_coins(g, PhaseConfig.standard(6), AdjacencyMatrix.backbone(g))
    for coin in coins.coins:
        assert max_diff(coin, pauli_x_coin()) < 1e-12


def test_szegedy_to_coins_complete_gives_grover():
    """Complete graph with standard phases has Grover coins"""
    coins = szegedy_to_coins(complete_graph(6), PhaseConfig.standard(6), complete_adjacency(6))
    for coin in coins.coins:
        assert max_diff(coin, grover_coin(5)) < 1e-12


def test_reconstructed_columns_sum_to_one(rng):
    """Cast chains are column-stochastic"""
    g, phases, adjacency = random_castable_instance(rng, 6)
    result = cast_to_szegedy(szegedy_to_coins(g, phases, adjacency), adjacency)
    np.testing.assert_allclose(result.g.g.sum(axis=0), np.ones(6), atol=1e-10)


def test_cast_result_to_dict():
    """JSON output carries class, chain and phases"""
    coins, adjacency = line_coin_set(lambda i: ntilde_coin(), 4)
    data = cast_to_szegedy(coins, adjacency).to_dict()
    assert data["lemma_class"] == "graph_phased"
    assert data["n"] == 4
    assert len(data["apr"]) == 4
    json.dumps(data)
