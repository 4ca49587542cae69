"""Coins of the coined walk equivalent to a graph-phased Szegedy walk."""

from typing import Optional, Sequence

import numpy as np

from api.errors import DimensionMismatch, IncompatibleSupport
from api.services.coins.coin_set import CoinSet
from api.services.graphs.transition import AdjacencyMatrix, TransitionMatrix, as_transition_matrix
from api.services.walk.phase_config import PhaseConfig


def szegedy_to_coins(
    g: TransitionMatrix,
    phases: PhaseConfig,
    adjacency: AdjacencyMatrix,
    neighbor_order: Optional[Sequence[Sequence[int]]] = None
) -> CoinSet:
    """
    Coin i = (1 - exp(i theta_i)) |omega_i><omega_i| - 1 on the neighbors of i,
    with omega_ik = exp(i phi_ik) sqrt(G_ki).

    Edges of the adjacency that carry no probability (ghost directed edges)
    stay in the coin space.

    Raises:
        IncompatibleSupport: If G has mass on an edge missing from the adjacency
        DimensionMismatch: If sizes disagree
    """
    g = as_transition_matrix(g)
    n = g.n_nodes
    if adjacency.n_nodes != n or phases.n_nodes != n:
        raise DimensionMismatch(
            f"Chain has {n} nodes, adjacency {adjacency.n_nodes}, phases {phases.n_nodes}"
        )

    # G[k, i] > 0 needs the directed edge (i, k), i.e. A[i, k] = 1
    outside = (g.g.T > 0) & (adjacency.a == 0)
    if np.any(outside):
        i, k = np.argwhere(outside)[0]
        raise IncompatibleSupport(f"Transition {i} -> {k} has probability {g.g[k, i]} but no edge")

    if neighbor_order is None:
        neighbor_order = [adjacency.neighbors(i) for i in range(n)]

    coins = []
    for i in range(n):
        idx = list(neighbor_order[i])
        omega = np.exp(1j * phases.link[i, idx]) * np.sqrt(g.g[idx, i])
        factor = 1.0 - np.exp(1j * phases.apr[i])
        coins.append(factor * np.outer(omega, omega.conj()) - np.eye(len(idx)))

    coin_set = CoinSet(coins=tuple(coins), neighbor_order=tuple(tuple(nb) for nb in neighbor_order))
    coin_set.validate_against(adjacency)
    return coin_set
