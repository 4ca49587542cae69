"""
Line walks simulated on a finite cycle.

A walk of t steps started at node 0 never reaches further than node +-t, so
a cycle with more than 2t + 2 nodes behaves as the infinite line. Signed
line coordinates map to cycle indices with node 0 at index 0 and negative
nodes wrapping from N - 1 downward.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import DimensionMismatch, NotStochastic, TooSmall
from api.services.graphs.families import cycle_graph
from api.services.graphs.transition import TransitionMatrix
from api.services.walk.phase_config import PhaseConfig

# Eigenvector (h_R, h_L) of the Hadamard coin for eigenvalue +1
H_RIGHT = 1.0 / np.sqrt(4.0 - 2.0 * np.sqrt(2.0))
H_LEFT = (np.sqrt(2.0) - 1.0) / np.sqrt(4.0 - 2.0 * np.sqrt(2.0))

LineWalk = Tuple[TransitionMatrix, PhaseConfig]


@dataclass(frozen=True)
class LineEmbedding:
    """Maps signed line coordinates onto the indices of an n-node cycle."""

    n_nodes: int

    def to_index(self, x: int) -> int:
        return int(x) % self.n_nodes

    def to_coordinate(self, index: int) -> int:
        index = int(index) % self.n_nodes
        return index if index < self.n_nodes // 2 else index - self.n_nodes

    def coordinates(self) -> NDArray[np.int64]:
        """Signed coordinate of every cycle index, in index order."""
        idx = np.arange(self.n_nodes)
        return np.where(idx < self.n_nodes // 2, idx, idx - self.n_nodes)

    def ordered(self, p: NDArray[np.float64]) -> Tuple[NDArray[np.int64], NDArray[np.float64]]:
        """Distribution re-indexed by ascending signed coordinate."""
        coords = self.coordinates()
        order = np.argsort(coords, kind="stable")
        return coords[order], np.asarray(p)[order]


def embedding_size(t_steps: int) -> int:
    """Smallest power of two strictly greater than 2 t + 2."""
    if t_steps < 0:
        raise TooSmall(f"Number of steps must be nonnegative, got {t_steps}")
    n = 1
    while n <= 2 * t_steps + 2:
        n *= 2
    return n


def line_embedding(t_steps: int) -> Tuple[TransitionMatrix, LineEmbedding]:
    """Unbiased cycle large enough for t_steps of line walk, and its offset map."""
    n = embedding_size(t_steps)
    return cycle_graph(n), LineEmbedding(n_nodes=n)


def biased_line(
    p_right: float,
    p_left: float,
    phase_left: float,
    n_nodes: int
) -> LineWalk:
    """
    Cycle walk with different jump probabilities to each side.

    Every leftward edge state |i>_1|i-1>_2 carries the link phase `phase_left`.
    APR phases default to pi everywhere.

    Raises:
        NotStochastic: If p_right + p_left != 1 or either is negative
        TooSmall: If the cycle has fewer than 3 nodes
    """
    if p_right < 0 or p_left < 0 or abs(p_right + p_left - 1.0) > settings.stochastic_tolerance:
        raise NotStochastic(f"Line probabilities {p_right} + {p_left} must be nonnegative and add up to 1")
    if n_nodes < 3:
        raise TooSmall(f"A biased cycle needs at least 3 nodes, got {n_nodes}")

    idx = np.arange(n_nodes)
    right = (idx + 1) % n_nodes
    left = (idx - 1) % n_nodes

    g = np.zeros((n_nodes, n_nodes))
    g[right, idx] = p_right
    g[left, idx] = p_left

    link = np.zeros((n_nodes, n_nodes))
    link[idx, left] = phase_left

    return TransitionMatrix(g=g), PhaseConfig(apr=np.full(n_nodes, np.pi), link=link)


def x_line(n_nodes: int) -> LineWalk:
    """Szegedy form of the Pauli-X coined walk: the unbiased line."""
    return biased_line(0.5, 0.5, 0.0, n_nodes)


def hadamard_line(n_nodes: int) -> LineWalk:
    """Szegedy form of the Hadamard coined walk: right with h_R^2, left with h_L^2."""
    return biased_line(H_RIGHT ** 2, H_LEFT ** 2, 0.0, n_nodes)


def ntilde_line(n_nodes: int) -> LineWalk:
    """Unbiased line with leftward link phase pi/2 and APR phase pi/2 on every node."""
    g, phases = biased_line(0.5, 0.5, np.pi / 2, n_nodes)
    return g, phases.with_apr(np.full(n_nodes, np.pi / 2))


def mixed_parity_walk(even_params: LineWalk, odd_params: LineWalk) -> LineWalk:
    """
    Combine two walks on the same cycle by node parity.

    Even columns of G, even rows of phi and even APR phases come from
    `even_params`; the odd ones from `odd_params`.

    Raises:
        DimensionMismatch: If the walks live on different cycle sizes
    """
    g_even, ph_even = even_params
    g_odd, ph_odd = odd_params
    n = g_even.n_nodes
    if g_odd.n_nodes != n or ph_even.n_nodes != n or ph_odd.n_nodes != n:
        raise DimensionMismatch(
            f"Parity walks must share one cycle size, got {g_even.n_nodes} and {g_odd.n_nodes}"
        )

    g = np.array(g_even.g)
    g[:, 1::2] = g_odd.g[:, 1::2]

    link = np.array(ph_even.link)
    link[1::2, :] = ph_odd.link[1::2, :]

    apr = np.array(ph_even.apr)
    apr[1::2] = ph_odd.apr[1::2]

    return TransitionMatrix(g=g), PhaseConfig(apr=apr, link=link)
