"""
Brute-force N^2 x N^2 operators, built straight from the definitions.

Flattened basis index of |i>_1|j>_2 is i * N + j. Nothing here shares code
with the fast kernel, so the two can check each other.
"""
from dataclasses import dataclass
from typing import Sequence
import logging

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import DimensionMismatch, TooLarge
from api.services.graphs.transition import AdjacencyMatrix, TransitionMatrix, as_transition_matrix
from api.services.walk.phase_config import PhaseConfig
from api.services.walk.state import WalkState, as_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseOperator:
    """Explicit operator on the N^2-dimensional edge space."""

    matrix: NDArray[np.complex128]
    n_nodes: int

    def apply(self, state: WalkState) -> WalkState:
        vector = self.matrix @ state_to_vector(state)
        return vector_to_state(vector, self.n_nodes)

    def is_unitary(self, tol: float = 1e-10) -> bool:
        eye = np.eye(self.matrix.shape[0])
        return bool(np.max(np.abs(self.matrix.conj().T @ self.matrix - eye)) < tol)

    def restrict(self, indices: Sequence[int]) -> NDArray[np.complex128]:
        """Block of the operator on the given flattened basis indices."""
        idx = np.asarray(indices, dtype=np.int64)
        return self.matrix[np.ix_(idx, idx)]

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        if other.n_nodes != self.n_nodes:
            raise DimensionMismatch(f"Cannot compose {self.n_nodes}-node and {other.n_nodes}-node operators")
        return DenseOperator(matrix=self.matrix @ other.matrix, n_nodes=self.n_nodes)


def state_to_vector(state) -> NDArray[np.complex128]:
    """Flatten a state matrix: entry i * N + j is the amplitude of |i>_1|j>_2."""
    return as_matrix(state).T.reshape(-1).copy()


def vector_to_state(vector, n: int) -> WalkState:
    return WalkState(phi=np.asarray(vector, dtype=np.complex128).reshape(n, n).T.copy())


def _guard(n: int) -> None:
    if n > settings.oracle_max_nodes:
        raise TooLarge(
            f"Dense operators are limited to {settings.oracle_max_nodes} nodes, got {n}"
        )


def dense_swap(n: int) -> NDArray[np.complex128]:
    """Permutation S_w = sum_ij |i,j><j,i|."""
    _guard(n)
    swap = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            swap[i * n + j, j * n + i] = 1.0
    return swap


def psi_vectors(g: TransitionMatrix, phases: PhaseConfig) -> NDArray[np.complex128]:
    """Column i is |psi_i(phi)> = sum_k exp(i phi_ik) sqrt(G_ki) |i>_1|k>_2 as an N^2 vector."""
    n = g.n_nodes
    vectors = np.zeros((n * n, n), dtype=np.complex128)
    for i in range(n):
        for k in range(n):
            vectors[i * n + k, i] = np.exp(1j * phases.link[i, k]) * np.sqrt(g.g[k, i])
    return vectors


def dense_sigma_doubled(g, phases: PhaseConfig) -> NDArray[np.complex128]:
    """2 Sigma = sum_i (1 - exp(i theta_i)) |psi_i(phi)><psi_i(phi)|."""
    g = as_transition_matrix(g)
    n = g.n_nodes
    _guard(n)
    if phases.n_nodes != n:
        raise DimensionMismatch(f"Phases are for {phases.n_nodes} nodes but the chain has {n}")

    vectors = psi_vectors(g, phases)
    sigma = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(n):
        sigma += (1.0 - np.exp(1j * phases.apr[i])) * np.outer(vectors[:, i], vectors[:, i].conj())
    return sigma


def dense_unitary(g, phases: PhaseConfig) -> DenseOperator:
    """
    U_s(theta, phi) = S_w (2 Sigma - 1) as an explicit matrix.

    Raises:
        TooLarge: Above the configured node limit
        DimensionMismatch: If phases do not match g
    """
    g = as_transition_matrix(g)
    n = g.n_nodes
    _guard(n)
    logger.debug(f"🔧 Building dense {n * n}x{n * n} operator")

    rotation = dense_sigma_doubled(g, phases) - np.eye(n * n)
    return DenseOperator(matrix=dense_swap(n) @ rotation, n_nodes=n)


def dense_double(g1, phases1: PhaseConfig, g2, phases2: PhaseConfig) -> DenseOperator:
    """W_s = U_s(g2, phases2) U_s(g1, phases1)."""
    return dense_unitary(g2, phases2) @ dense_unitary(g1, phases1)


def reduced_indices(adjacency: AdjacencyMatrix) -> NDArray[np.int64]:
    """Flattened indices of the edge states |i>_1|j>_2 with A_ij = 1."""
    n = adjacency.n_nodes
    i, j = np.nonzero(adjacency.a)
    return np.sort(i * n + j)


def dense_coined_operator(coin_set) -> DenseOperator:
    """
    Augmented coined operator S_w C^A on the full edge space.

    Coin i acts on |i>_1|k>_2 for k in its neighbor order; every edge state
    outside the graph gets -1.
    """
    n = coin_set.n_nodes
    _guard(n)

    coin = -np.eye(n * n, dtype=np.complex128)
    for i, (c, neighbors) in enumerate(zip(coin_set.coins, coin_set.neighbor_order)):
        idx = np.array([i * n + k for k in neighbors], dtype=np.int64)
        coin[np.ix_(idx, idx)] = c
    return DenseOperator(matrix=dense_swap(n) @ coin, n_nodes=n)
