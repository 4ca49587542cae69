"""Reference oracle: dense operators and their agreement with the kernel"""
import numpy as np
import pytest

from api.errors import TooLarge
from api.services.graphs import (
    AdjacencyMatrix,
    MarkedSet,
    TransitionMatrix,
    absorb,
    complete_graph,
    mark_apr,
    random_phase_config,
    random_transition_matrix,
)
from api.services.oracle import (
    DenseOperator,
    dense_double,
    dense_swap,
    dense_unitary,
    reduced_indices,
    state_to_vector,
    vector_to_state,
)
from api.services.walk import PhaseConfig, basis_state, build_walk, random_state, step_single
from tests.conftest import max_diff


def test_flattening_convention():
    """|i>_1|j>_2 sits at i * N + j"""
    vector = state_to_vector(basis_state(4, 1, 3))
    assert np.flatnonzero(vector).tolist() == [7]
    assert vector_to_state(vector, 4).amplitude(1, 3) == 1.0


def test_single_node_operator():
    """N = 1 with theta = pi is the 1x1 identity"""
    op = dense_unitary(TransitionMatrix(g=[[1.0]]), PhaseConfig.standard(1))
    np.testing.assert_allclose(op.matrix, [[1.0]])


def test_two_node_uniform_by_hand():
    """Uniform 2-node chain: columns of S_w(2 Pi - 1) evaluated by hand"""
    op = dense_unitary(TransitionMatrix(g=np.full((2, 2), 0.5)), PhaseConfig.standard(2))
    # R|00> = |01>, R|01> = |00>, R|10> = |11>, R|11> = |10>; then swap 01 <-> 10
    expected = np.zeros((4, 4))
    expected[2, 0] = 1.0  # |00> -> |01> -> |10>
    expected[0, 1] = 1.0  # |01> -> |00>
    expected[3, 2] = 1.0  # |10> -> |11>
    expected[1, 3] = 1.0  # |11> -> |10> -> |01>
    assert max_diff(op.matrix, expected) < 1e-15


def test_zero_apr_is_minus_swap(rng):
    """theta = 0 everywhere gives exactly -S_w"""
    g = random_transition_matrix(3, rng)
    op = dense_unitary(g, PhaseConfig.global_apr(3, 0.0))
    assert max_diff(op.matrix, -dense_swap(3)) == 0.0


def test_dense_unitary_is_unitary(rng):
    """Random inputs give unitary operators"""
    for n in (2, 3, 5):
        op = dense_unitary(random_transition_matrix(n, rng), random_phase_config(n, rng))
        assert op.is_unitary(1e-10)


def test_dense_matches_kernel_on_basis_states(rng):
    """Every basis state agrees with the fast kernel for N <= 8"""
    for n in range(2, 9):
        g = random_transition_matrix(n, rng)
        phases = random_phase_config(n, rng)
        op = dense_unitary(g, phases)
        walk = build_walk(g, phases)
        for first in range(n):
            for second in range(n):
                fast = state_to_vector(step_single(basis_state(n, first, second), walk))
                assert max_diff(fast, op.matrix[:, first * n + second]) < 1e-12


def test_dense_double_standard_is_square(rng):
    """Equal standard walks give U_s squared"""
    g = random_transition_matrix(4, rng)
    phases = PhaseConfig.standard(4)
    single = dense_unitary(g, phases)
    assert max_diff(dense_double(g, phases, g, phases).matrix, (single @ single).matrix) < 1e-15


def test_dense_double_random_is_unitary(rng):
    """The product of two random dense unitaries stays unitary"""
    g1, g2 = random_transition_matrix(4, rng), random_transition_matrix(4, rng)
    op = dense_double(g1, random_phase_config(4, rng), g2, random_phase_config(4, rng))
    assert op.is_unitary(1e-12)


def test_single_vs_double_marked_complete_graph():
    """APR-marked and absorbing walks differ by -1 on the marked self-loop only; squares agree"""
    n, k = 6, 4
    marked = MarkedSet(nodes=frozenset({k}))
    g = complete_graph(n)
    apr = dense_unitary(g, PhaseConfig(apr=mark_apr(n, marked), link=np.zeros((n, n))))
    absorbing = dense_unitary(absorb(g, marked), PhaseConfig.standard(n))

    kk = k * n + k
    diff = apr.matrix - absorbing.matrix
    assert abs(apr.matrix[kk, kk] - (-1.0)) < 1e-12
    assert abs(absorbing.matrix[kk, kk] - 1.0) < 1e-12
    diff[kk, kk] = 0.0
    assert np.max(np.abs(diff)) < 1e-12

    assert max_diff((apr @ apr).matrix, (absorbing @ absorbing).matrix) < 1e-12


def test_reduced_subspace_is_invariant(g4):
    """Edge states of the backbone map into themselves"""
    adjacency = AdjacencyMatrix.backbone(g4)
    op = dense_unitary(g4, PhaseConfig(apr=[np.pi, 1.0, 2.0, np.pi], link=np.zeros((4, 4))))
    reduced = reduced_indices(adjacency)
    outside = np.setdiff1d(np.arange(16), reduced)
    assert np.max(np.abs(op.matrix[np.ix_(outside, reduced)])) < 1e-12


def test_restrict_and_apply(rng):
    """restrict picks a principal block; apply matches matrix-vector products"""
    op = DenseOperator(matrix=np.arange(16.0).reshape(4, 4).astype(complex), n_nodes=2)
    np.testing.assert_array_equal(op.restrict([1, 3]), [[5, 7], [13, 15]])
    state = random_state(2, rng)
    np.testing.assert_allclose(state_to_vector(op.apply(state)), op.matrix @ state_to_vector(state))


def test_size_guard():
    """Dense operators above 64 nodes are refused"""
    with pytest.raises(TooLarge):
        dense_swap(65)
