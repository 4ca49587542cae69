"""Classical Markov-chain evolution, p(t) = G^t p(0)."""

from typing import List

import numpy as np
from numpy.typing import NDArray

from api.errors import InvalidConfig
from api.services.graphs.transition import TransitionMatrix, validate_distribution


def classical_trajectory(g: TransitionMatrix, p0, t: int) -> List[NDArray[np.float64]]:
    """
    Evolve a probability vector under the chain and keep every step.

    Args:
        g: Column-stochastic transition matrix
        p0: Initial probability vector of length N
        t: Number of steps (>= 0)

    Returns:
        List [p(0), p(1), ..., p(t)]

    Raises:
        NotDistribution: If p0 is not a probability vector of length N
    """
    if t < 0:
        raise InvalidConfig(f"Number of steps must be nonnegative, got {t}")

    p = validate_distribution(p0, n=g.n_nodes).copy()
    trajectory = [p]
    for _ in range(t):
        p = g.g @ p
        trajectory.append(p)
    return trajectory


def classical_evolve(g: TransitionMatrix, p0, t: int) -> NDArray[np.float64]:
    """Return G^t p0 by repeated multiplication (O(t N^2))."""
    return classical_trajectory(g, p0, t)[-1]
