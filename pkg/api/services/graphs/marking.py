"""Marking nodes: absorbing vertices and local APR phases."""

import numpy as np
from numpy.typing import NDArray

from api.services.graphs.transition import MarkedSet, TransitionMatrix


def absorb(g: TransitionMatrix, marked: MarkedSet) -> TransitionMatrix:
    """
    Turn marked nodes into sinks: their columns become the basis vector e_i.

    Raises:
        InvalidNode: If the marked set is empty or has indices outside [0, N)
    """
    marked.validate(g.n_nodes)

    g_prime = np.array(g.g)
    for i in marked.nodes:
        g_prime[:, i] = 0.0
        g_prime[i, i] = 1.0
    return TransitionMatrix(g=g_prime)


def mark_apr(n: int, marked: MarkedSet, base_phase: float = np.pi) -> NDArray[np.float64]:
    """
    APR vector with `base_phase` everywhere and the marked phase on marked nodes.

    An empty marked set is allowed here and returns the unmodified vector.
    """
    marked.validate(n, require_nonempty=False)

    apr = np.full(n, float(base_phase))
    if marked.nodes:
        apr[list(marked.nodes)] = marked.mark_phase
    return apr


def t_max_prediction(n: int, m: int) -> float:
    """Double-step count of the first search peak on the complete graph, (pi/4) sqrt(N / 2M) - 1/4."""
    return (np.pi / 4.0) * np.sqrt(n / (2.0 * m)) - 0.25
