"""
Castability of coined walks under the double Szegedy operator.

Some coins cannot be cast into a single Szegedy step but their squared walk
matches a double step. The case handled here is -1 coins on marked nodes:
two coined steps equal W'_s built from the absorbing-vertex chain G', where
the marked columns become self-loops. Coin sets with any other non-castable
coin are reported as undetermined.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import logging

import numpy as np

from api.config import settings
from api.errors import DimensionLimit, NotCastable
from api.services.coins.cast_to_szegedy import cast_coin
from api.services.coins.coin_set import CoinSet
from api.services.graphs.marking import absorb
from api.services.graphs.transition import AdjacencyMatrix, MarkedSet, TransitionMatrix
from api.services.oracle.dense import dense_coined_operator, dense_unitary, reduced_indices
from api.services.walk.phase_config import PhaseConfig

logger = logging.getLogger(__name__)

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"
UNDETERMINED = "undetermined"


@dataclass
class DoubleCastReport:
    status: str
    marked_nodes: List[int] = field(default_factory=list)
    max_double_diff: Optional[float] = None
    single_step_max_diff: Optional[float] = None
    self_loop_phases: Dict[int, complex] = field(default_factory=dict)
    undetermined_node: Optional[int] = None
    absorbing_chain: Optional[TransitionMatrix] = None
    absorbing_phases: Optional[PhaseConfig] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "marked_nodes": self.marked_nodes,
            "max_double_diff": self.max_double_diff,
            "single_step_max_diff": self.single_step_max_diff,
            "self_loop_phases": {
                str(k): [float(v.real), float(v.imag)] for k, v in self.self_loop_phases.items()
            },
            "undetermined_node": self.undetermined_node,
        }


def check_double_castability(
    coins: CoinSet,
    adjacency: AdjacencyMatrix,
    tol: float = 1e-10
) -> DoubleCastReport:
    """
    Compare two coined steps with the absorbing-vertex double Szegedy step.

    Both operators are built densely on the augmented edge space and compared
    on the reduced subspace spanned by the graph's edge states.

    Raises:
        DimensionLimit: If N exceeds the dense oracle limit or the edge space the dense-check limit
        DimensionMismatch: If neighbor orders do not match the adjacency
    """
    coins.validate_against(adjacency)
    n = coins.n_nodes
    if n > settings.oracle_max_nodes or n * n > settings.double_check_max_dimension:
        raise DimensionLimit(
            f"A {n}-node coin set exceeds the dense check limits "
            f"({settings.oracle_max_nodes} nodes, edge space {settings.double_check_max_dimension})"
        )

    g = np.zeros((n, n))
    apr = np.full(n, np.pi)
    link = np.zeros((n, n))
    marked: List[int] = []

    for i, (coin, neighbors) in enumerate(zip(coins.coins, coins.neighbor_order)):
        d = coin.shape[0]
        if d and np.max(np.abs(coin + np.eye(d))) < settings.eigen_tolerance:
            marked.append(i)
            g[i, i] = 1.0
            continue
        try:
            theta, omega = cast_coin(coin, settings.eigen_tolerance)
        except NotCastable:
            logger.info(f"⚠️ Coin of node {i} is neither castable nor -1; double castability undetermined")
            return DoubleCastReport(status=UNDETERMINED, undetermined_node=i)

        idx = list(neighbors)
        g[idx, i] = np.abs(omega) ** 2
        link[i, idx] = np.angle(omega)
        apr[i] = theta

    g_cast = TransitionMatrix(g=g)
    phases = PhaseConfig(apr=apr, link=link)
    if marked:
        # column i is already e_i; absorb re-validates the marked set
        g_cast = absorb(g_cast, MarkedSet(nodes=frozenset(marked)))

    coined = dense_coined_operator(coins)
    szegedy = dense_unitary(g_cast, phases)
    reduced = reduced_indices(adjacency)

    double_diff = float(np.max(np.abs((coined @ coined).restrict(reduced) - (szegedy @ szegedy).restrict(reduced))))
    single_diff = float(np.max(np.abs(coined.restrict(reduced) - szegedy.restrict(reduced))))

    loop_phases = {}
    for k in marked:
        kk = k * n + k
        loop_phases[k] = complex(coined.matrix[kk, kk] * np.conj(szegedy.matrix[kk, kk]))

    status = EQUIVALENT if double_diff < tol else NOT_EQUIVALENT
    logger.info(
        f"✅ Double castability: {status} (max diff {double_diff:.2e}, {len(marked)} marked nodes)"
    )
    return DoubleCastReport(
        status=status,
        marked_nodes=marked,
        max_double_diff=double_diff,
        single_step_max_diff=single_diff,
        self_loop_phases=loop_phases,
        absorbing_chain=g_cast,
        absorbing_phases=phases,
    )
