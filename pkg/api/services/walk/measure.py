"""Register measurements and the uniform initial state."""

from enum import Enum
from typing import Union

import numpy as np
from numpy.typing import NDArray

from api.services.walk.build_walk import SzegedyWalk
from api.services.walk.state import WalkState, check_measurable


class Register(str, Enum):
    FIRST = "first"
    SECOND = "second"


def measure_register(state: WalkState, register: Union[Register, str] = Register.FIRST) -> NDArray[np.float64]:
    """
    Probability of each node when measuring one register.

    First register: p_i = sum_j |phi[j, i]|^2 (column sums).
    Second register: row sums.

    Raises:
        UnnormalizedState: If the state norm deviates from 1 beyond the measurement tolerance
    """
    register = Register(register)
    check_measurable(state)

    weights = np.abs(state.phi) ** 2
    axis = 0 if register is Register.FIRST else 1
    return weights.sum(axis=axis)


def initial_uniform_psi(walk: SzegedyWalk) -> WalkState:
    """(1/sqrt(N)) sum_i |psi_i(phi)>: the equal superposition of every psi state."""
    return WalkState(phi=np.array(walk.psi_matrix) / np.sqrt(walk.n_nodes))
