"""Named graph families and random chains."""

from typing import Optional

import numpy as np

from api.errors import TooSmall
from api.services.graphs.normalize_adjacency import normalize_adjacency
from api.services.graphs.transition import AdjacencyMatrix, TransitionMatrix
from api.services.walk.phase_config import PhaseConfig


def complete_graph(n: int) -> TransitionMatrix:
    """
    Complete graph without self-loops, G[j, i] = (1 - delta_ji) / (N - 1).

    Raises:
        TooSmall: If n < 2
    """
    if n < 2:
        raise TooSmall(f"Complete graph needs at least 2 nodes, got {n}")

    g = np.full((n, n), 1.0 / (n - 1))
    np.fill_diagonal(g, 0.0)
    return TransitionMatrix(g=g)


def cycle_adjacency(n: int) -> AdjacencyMatrix:
    """Undirected cycle 0 - 1 - ... - (n-1) - 0."""
    if n < 2:
        raise TooSmall(f"Cycle needs at least 2 nodes, got {n}")
    return AdjacencyMatrix.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_graph(n: int) -> TransitionMatrix:
    """Unbiased walk on the cycle: one half to each neighbour, with wraparound."""
    return normalize_adjacency(cycle_adjacency(n))


def random_transition_matrix(
    n: int,
    rng: np.random.Generator,
    density: float = 1.0
) -> TransitionMatrix:
    """
    Random column-stochastic matrix.

    With density < 1 each entry is kept with that probability; every column
    keeps at least one nonzero entry.
    """
    if n < 1:
        raise TooSmall(f"Need at least one node, got {n}")

    g = rng.random((n, n))
    if density < 1.0:
        keep = rng.random((n, n)) < density
        # one guaranteed survivor per column
        keep[rng.integers(0, n, size=n), np.arange(n)] = True
        g = np.where(keep, g, 0.0)

    g = g / g.sum(axis=0, keepdims=True)
    return TransitionMatrix(g=g)


def random_phase_config(n: int, rng: np.random.Generator, link_scale: Optional[float] = None) -> PhaseConfig:
    """Uniform APR phases in [0, 2pi) and link phases in [0, link_scale) (default 2pi)."""
    scale = 2.0 * np.pi if link_scale is None else link_scale
    return PhaseConfig(
        apr=rng.uniform(0.0, 2.0 * np.pi, size=n),
        link=rng.uniform(0.0, scale, size=(n, n)),
    )
