"""
Casting coined walks into graph-phased Szegedy walks.

A coin C_i is castable when it has exactly d_i - 1 eigenvalues equal to -1
and one remaining eigenvalue lambda_i = -exp(i theta_i). Its eigenvector
omega_i gives the transition probabilities |omega_ik|^2 and the link phases
arg(omega_ik). Eigenvectors are gauge-fixed so that the first nonzero
amplitude, in neighbor order, is real and positive.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple
import logging

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import IsolatedNode, NotCastable
from api.services.coins.coin_set import Coin, CoinSet
from api.services.graphs.transition import AdjacencyMatrix, TransitionMatrix
from api.services.walk.phase_config import PhaseConfig

logger = logging.getLogger(__name__)


class LemmaClass(str, Enum):
    STANDARD = "standard"            # theta = pi, no link phases
    LINK_PHASED = "link_phased"      # theta = pi
    VERTEX_PHASED = "vertex_phased"  # real non-negative eigenvectors
    GRAPH_PHASED = "graph_phased"
    NOT_CASTABLE = "not_castable"


@dataclass(frozen=True)
class CastResult:
    g: TransitionMatrix
    phases: PhaseConfig
    lemma_class: LemmaClass

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lemma_class": self.lemma_class.value,
            "n": self.g.n_nodes,
            "transition_matrix": self.g.g.tolist(),
            "apr": self.phases.apr.tolist(),
            "link_phases": self.phases.link.tolist(),
        }


def _angle_distance(a, b) -> NDArray[np.float64]:
    """Distance between angles on the circle."""
    return np.abs(np.angle(np.exp(1j * (np.asarray(a) - np.asarray(b)))))


def cast_coin(coin: Coin, tol: float) -> Tuple[float, NDArray[np.complex128]]:
    """
    Phase-rotation form of a single coin.

    Returns:
        (theta, omega): APR phase in [0, 2pi) and the gauge-fixed unit eigenvector

    Raises:
        NotCastable: If the -1 eigenspace does not have dimension d - 1
    """
    d = coin.shape[0]
    if d == 0:
        raise IsolatedNode("A node without neighbors has no coin to cast")

    eigenvalues, eigenvectors = np.linalg.eig(coin)
    near_minus_one = np.abs(eigenvalues + 1.0) < tol
    if int(near_minus_one.sum()) != d - 1:
        raise NotCastable(
            f"Coin has {int(near_minus_one.sum())} eigenvalues at -1, expected {d - 1}",
            eigenvalues=eigenvalues.tolist(),
        )

    j = int(np.argmax(np.abs(eigenvalues + 1.0)))
    theta = float(np.mod(np.angle(-eigenvalues[j]), 2.0 * np.pi))

    omega = eigenvectors[:, j] / np.linalg.norm(eigenvectors[:, j])
    first = int(np.flatnonzero(np.abs(omega) > tol)[0])
    omega = omega * np.exp(-1j * np.angle(omega[first]))
    return theta, omega


def cast_to_szegedy(
    coins: CoinSet,
    adjacency: AdjacencyMatrix,
    tol: Optional[float] = None
) -> CastResult:
    """
    Convert a coin set into (G, theta, phi) and classify it.

    Args:
        coins: Unitary coins with their neighbor orders
        adjacency: Undirected graph the coins live on
        tol: Eigenvalue clustering tolerance (default from settings)

    Returns:
        CastResult with the most restrictive lemma class that applies

    Raises:
        NotUnitary: Raised by CoinSet for non-unitary coins
        NotCastable: With the offending node and its eigenvalues
        DimensionMismatch: If neighbor orders do not match the adjacency
    """
    tol = settings.eigen_tolerance if tol is None else tol
    coins.validate_against(adjacency)
    n = coins.n_nodes

    g = np.zeros((n, n))
    apr = np.zeros(n)
    link = np.zeros((n, n))

    for i, (coin, neighbors) in enumerate(zip(coins.coins, coins.neighbor_order)):
        try:
            theta, omega = cast_coin(coin, tol)
        except NotCastable as e:
            logger.error(f"❌ Coin of node {i} is not castable: {e}")
            raise NotCastable(f"Node {i}: {e}", node=i, eigenvalues=e.eigenvalues)

        idx = list(neighbors)
        g[idx, i] = np.abs(omega) ** 2
        present = np.abs(omega) > tol
        link[i, idx] = np.where(present, np.angle(omega), 0.0)
        apr[i] = theta

    phases = PhaseConfig(apr=apr, link=link)
    all_pi = bool(np.all(_angle_distance(apr, np.pi) < tol))
    no_links = bool(np.all(_angle_distance(link, 0.0) < tol))

    if all_pi and no_links:
        lemma_class = LemmaClass.STANDARD
    elif all_pi:
        lemma_class = LemmaClass.LINK_PHASED
    elif no_links:
        lemma_class = LemmaClass.VERTEX_PHASED
    else:
        lemma_class = LemmaClass.GRAPH_PHASED

    logger.info(f"✅ Cast {n} coins into a {lemma_class.value} Szegedy walk")
    return CastResult(g=TransitionMatrix(g=g), phases=phases, lemma_class=lemma_class)
