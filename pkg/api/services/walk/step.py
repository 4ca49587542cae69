"""Swap, single-step and double-step evolution."""

from typing import Callable, Optional
import logging

import numpy as np

from api.config import settings
from api.errors import NormDrift
from api.services.walk.build_walk import SzegedyWalk
from api.services.walk.sigma import apply_rotation_swapped
from api.services.walk.state import WalkState, as_matrix

logger = logging.getLogger(__name__)

StepCallback = Callable[[int, WalkState], None]


def apply_swap(state: WalkState) -> WalkState:
    """Exchange the two registers: |i>_1|j>_2 -> |j>_1|i>_2, i.e. transpose the state matrix."""
    return WalkState(phi=np.ascontiguousarray(as_matrix(state).T))


def _check_preserved(before: WalkState, after: WalkState) -> None:
    drift = abs(after.norm() - before.norm())
    if drift > settings.norm_tolerance:
        raise NormDrift(f"Step changed the state norm by {drift:.3e} (tolerance {settings.norm_tolerance})")


def step_single(state: WalkState, walk: SzegedyWalk, check_norm: bool = True) -> WalkState:
    """
    One application of U_s(theta, phi) = S_w R(theta, phi).

    Raises:
        DimensionMismatch: If the state and walk sizes differ
        NormDrift: If the Frobenius norm moved by more than the configured tolerance
    """
    if not isinstance(state, WalkState):
        state = WalkState(phi=state)
    result = WalkState(phi=apply_rotation_swapped(state, walk))
    if check_norm:
        _check_preserved(state, result)
    return result


def step_double(
    state: WalkState,
    walk1: SzegedyWalk,
    walk2: SzegedyWalk,
    check_norm: bool = True
) -> WalkState:
    """W_s = U_s(walk2) U_s(walk1): walk1 acts first."""
    return step_single(step_single(state, walk1, check_norm), walk2, check_norm)


def _evolve(
    state: WalkState,
    advance: Callable[[WalkState], WalkState],
    steps: int,
    renorm_every: Optional[int],
    callback: Optional[StepCallback]
) -> WalkState:
    if callback is not None:
        callback(0, state)

    for t in range(1, steps + 1):
        state = advance(state)

        # with renormalization only the per-step check in step_single applies
        drift = abs(state.norm() - 1.0)
        if renorm_every:
            if t % renorm_every == 0:
                logger.debug(f"🔧 Renormalizing at step {t}, drift {drift:.3e}")
                state = state.normalized()
        elif drift > settings.norm_tolerance:
            raise NormDrift(f"State norm drifted by {drift:.3e} after {t} steps")

        if callback is not None:
            callback(t, state)

    return state


def evolve(
    state: WalkState,
    walk: SzegedyWalk,
    steps: int,
    renorm_every: Optional[int] = None,
    callback: Optional[StepCallback] = None
) -> WalkState:
    """
    Apply step_single `steps` times.

    `callback(t, state)` is called for t = 0..steps. Each step must preserve
    the norm of its input. Without `renorm_every` the norm must also stay
    within tolerance of 1; with `renorm_every=k` the state is instead
    renormalized every k steps.
    """
    logger.info(f"🚶 Evolving {walk.n_nodes}-node walk for {steps} single steps")
    return _evolve(state, lambda s: step_single(s, walk), steps, renorm_every, callback)


def evolve_double(
    state: WalkState,
    walk1: SzegedyWalk,
    walk2: SzegedyWalk,
    steps: int,
    renorm_every: Optional[int] = None,
    callback: Optional[StepCallback] = None
) -> WalkState:
    """Apply step_double `steps` times, with the same callback and norm policy as `evolve`."""
    logger.info(f"🚶 Evolving {walk1.n_nodes}-node walk for {steps} double steps")
    return _evolve(state, lambda s: step_double(s, walk1, walk2), steps, renorm_every, callback)
