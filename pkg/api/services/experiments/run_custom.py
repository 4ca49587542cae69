"""Custom chains from the graph input format."""

from typing import Optional
import logging

from api.config import settings
from api.services.experiments.models import RunRecord, Scenario
from api.services.experiments.recording import StepTimer, checked_row
from api.services.graphs.transition import TransitionMatrix
from api.services.walk.build_walk import build_walk
from api.services.walk.measure import Register, initial_uniform_psi, measure_register
from api.services.walk.phase_config import PhaseConfig
from api.services.walk.state import WalkState
from api.services.walk.step import evolve

logger = logging.getLogger(__name__)


def run_custom(
    g: TransitionMatrix,
    phases: PhaseConfig,
    steps: int,
    record_second: bool = False,
    renorm_every: Optional[int] = None
) -> RunRecord:
    """Evolve the uniform psi superposition of a user chain and record every step."""
    walk = build_walk(g, phases)
    nodes = list(range(g.n_nodes))
    rows = []
    timer = StepTimer()

    def record(t: int, state: WalkState) -> None:
        if t > 0:
            timer.tick()
        rows.append(checked_row(t, "first", nodes, measure_register(state, Register.FIRST)))
        if record_second:
            rows.append(checked_row(t, "second", nodes, measure_register(state, Register.SECOND)))

    logger.info(f"🔧 Custom walk on {g.n_nodes} nodes for {steps} steps")
    evolve(initial_uniform_psi(walk), walk, steps, renorm_every=renorm_every, callback=record)

    return RunRecord(
        scenario=Scenario.CUSTOM,
        parameters={"n_nodes": g.n_nodes, "steps": steps, "renorm_every": renorm_every},
        version=settings.app_version,
        distributions=rows,
        seconds_per_step=timer.seconds,
        metadata={"initial_state": "uniform psi superposition"},
    )
