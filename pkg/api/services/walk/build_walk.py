"""Build the precomputed Psi matrix and APR factors of a graph-phased walk."""

from dataclasses import dataclass
from functools import cached_property
import logging

import numpy as np
from numpy.typing import NDArray

from api.errors import DimensionMismatch
from api.services.graphs.transition import TransitionMatrix, as_transition_matrix
from api.services.walk.phase_config import PhaseConfig

logger = logging.getLogger(__name__)

# Phases below this are treated as zero by the inert-phase lint
_PHASE_LINT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SzegedyWalk:
    """
    Immutable, shareable walk data.

    psi_matrix[k, i] = exp(i phi[i, k]) sqrt(G[k, i]); column i holds the
    second-register amplitudes of |psi_i(phi)>. apr_factors[i] = 1 - exp(i theta_i).
    """

    psi_matrix: NDArray[np.complex128]
    apr_factors: NDArray[np.complex128]

    @property
    def n_nodes(self) -> int:
        return self.psi_matrix.shape[0]

    @cached_property
    def psi_conjugate(self) -> NDArray[np.complex128]:
        out = np.conj(self.psi_matrix)
        out.setflags(write=False)
        return out

    @cached_property
    def psi_transposed(self) -> NDArray[np.complex128]:
        """C-contiguous Psi^T; row i holds the second-register amplitudes of |psi_i>."""
        out = np.ascontiguousarray(self.psi_matrix.T)
        out.setflags(write=False)
        return out


def build_walk(g: TransitionMatrix, phases: PhaseConfig) -> SzegedyWalk:
    """
    Precompute Psi and the APR factor vector.

    Psi is the element-wise square root of G multiplied element-wise by the
    exponentiated transpose of the link-phase matrix.

    Args:
        g: Column-stochastic transition matrix (validated on construction)
        phases: APR and link phases for the same N

    Returns:
        SzegedyWalk ready for the O(N^2) kernel

    Raises:
        DimensionMismatch: If phases do not match g
        NotStochastic: If g is given as a raw array that is not column-stochastic
    """
    g = as_transition_matrix(g)
    n = g.n_nodes
    if phases.n_nodes != n:
        raise DimensionMismatch(f"Phases are for {phases.n_nodes} nodes but the chain has {n}")

    inert = (g.g.T == 0) & (np.abs(np.angle(np.exp(1j * phases.link))) > _PHASE_LINT_TOLERANCE)
    if np.any(inert):
        i, j = np.argwhere(inert)[0]
        logger.warning(
            f"⚠️ {int(inert.sum())} zero-probability edge state(s) carry a link phase "
            f"(first at |{i}>_1|{j}>_2); the phase has no effect"
        )

    psi = np.exp(1j * phases.link.T) * np.sqrt(g.g)
    apr_factors = 1.0 - np.exp(1j * phases.apr)

    psi.setflags(write=False)
    apr_factors.setflags(write=False)

    logger.debug(f"🔧 Built walk on {n} nodes")
    return SzegedyWalk(psi_matrix=psi, apr_factors=apr_factors)
