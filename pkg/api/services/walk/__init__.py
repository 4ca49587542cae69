"""Walk core services - quantum state and the O(N^2) evolution kernel."""

# phase_config must load first: the graph services import it while the
# walk package is still initializing.
from .phase_config import PhaseConfig
from .state import (
    WalkState,
    basis_state,
    random_state,
    state_from_amplitudes,
)
from .build_walk import SzegedyWalk, build_walk
from .sigma import apply_sigma_doubled, apply_phase_rotation, apply_rotation_swapped
from .step import apply_swap, step_single, step_double, evolve, evolve_double
from .measure import Register, measure_register, initial_uniform_psi

__all__ = [
    "PhaseConfig",
    "WalkState",
    "basis_state",
    "random_state",
    "state_from_amplitudes",
    "SzegedyWalk",
    "build_walk",
    "apply_sigma_doubled",
    "apply_phase_rotation",
    "apply_rotation_swapped",
    "apply_swap",
    "step_single",
    "step_double",
    "evolve",
    "evolve_double",
    "Register",
    "measure_register",
    "initial_uniform_psi",
]
