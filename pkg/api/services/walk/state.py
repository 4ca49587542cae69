"""
Quantum state of the walk, stored as an N x N matrix.

phi[j, i] is the amplitude of |i>_1|j>_2: the column index is the first
register. Public helpers always take (first, second) index pairs so callers
never deal with the transposition.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import DimensionMismatch, InvalidNode, UnnormalizedState


@dataclass(frozen=True)
class WalkState:
    """N^2-dimensional walk state; phi[second, first] holds the amplitude. Treat phi as read-only."""

    phi: NDArray[np.complex128]

    def __post_init__(self):
        phi = np.asarray(self.phi, dtype=np.complex128)
        if phi.ndim != 2 or phi.shape[0] != phi.shape[1] or phi.shape[0] == 0:
            raise DimensionMismatch(f"State matrix must be square and nonempty, got shape {phi.shape}")
        object.__setattr__(self, "phi", phi)

    @property
    def n_nodes(self) -> int:
        return self.phi.shape[0]

    def amplitude(self, first: int, second: int) -> complex:
        return complex(self.phi[second, first])

    def norm(self) -> float:
        return self._frobenius_norm

    @cached_property
    def _frobenius_norm(self) -> float:
        return float(np.sqrt(np.vdot(self.phi, self.phi).real))

    def check_normalized(self, tol: float) -> None:
        """Raise UnnormalizedState if the Frobenius norm is off 1 by more than tol."""
        norm = self.norm()
        if abs(norm - 1.0) > tol:
            raise UnnormalizedState(f"State norm {norm!r} deviates from 1 by more than {tol}")

    def normalized(self) -> "WalkState":
        return WalkState(phi=self.phi / self.norm())


def _check_node(n: int, *nodes: int) -> None:
    for k in nodes:
        if not 0 <= k < n:
            raise InvalidNode(f"Node {k} outside [0, {n})")


def basis_state(n: int, first: int, second: int) -> WalkState:
    """The edge state |first>_1|second>_2."""
    _check_node(n, first, second)
    phi = np.zeros((n, n), dtype=np.complex128)
    phi[second, first] = 1.0
    return WalkState(phi=phi)


def state_from_amplitudes(n: int, amplitudes: Dict[Tuple[int, int], complex]) -> WalkState:
    """
    Build a normalized state from sparse {(first, second): amplitude} data.

    Raises:
        InvalidNode: If an index falls outside [0, n)
        UnnormalizedState: If every amplitude is zero
    """
    phi = np.zeros((n, n), dtype=np.complex128)
    for (first, second), value in amplitudes.items():
        _check_node(n, first, second)
        phi[second, first] += value

    norm = np.linalg.norm(phi)
    if norm == 0:
        raise UnnormalizedState("Cannot normalize a state with no amplitude")
    return WalkState(phi=phi / norm)


def random_state(n: int, rng: np.random.Generator) -> WalkState:
    """Normalized state with i.i.d. complex Gaussian amplitudes."""
    phi = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return WalkState(phi=phi / np.linalg.norm(phi))


def as_matrix(state) -> NDArray[np.complex128]:
    """State matrix of a WalkState or of a raw array."""
    if isinstance(state, WalkState):
        return state.phi
    return np.asarray(state, dtype=np.complex128)


def check_measurable(state: WalkState) -> None:
    state.check_normalized(settings.measurement_tolerance)
