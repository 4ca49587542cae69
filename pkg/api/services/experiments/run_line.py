"""Line-walk scenarios on the cycle embedding."""

from typing import Optional
import logging

import numpy as np

from api.config import settings
from api.errors import InvalidConfig
from api.services.experiments.models import RunRecord, Scenario
from api.services.experiments.recording import StepTimer, checked_row, total_variation
from api.services.graphs.lines import (
    LineEmbedding,
    LineWalk,
    embedding_size,
    hadamard_line,
    line_embedding,
    mixed_parity_walk,
    ntilde_line,
)
from api.services.walk.build_walk import build_walk
from api.services.walk.measure import Register, measure_register
from api.services.walk.phase_config import PhaseConfig
from api.services.walk.state import WalkState, state_from_amplitudes
from api.services.walk.step import evolve

logger = logging.getLogger(__name__)


def line_walk_for(scenario: Scenario, steps: int) -> tuple[LineWalk, LineEmbedding]:
    """Chain, phases and offset map of a line scenario."""
    if scenario == Scenario.LINE_X:
        g, embedding = line_embedding(steps)
        return (g, PhaseConfig.standard(g.n_nodes)), embedding

    n = embedding_size(steps)
    embedding = LineEmbedding(n_nodes=n)
    if scenario == Scenario.LINE_HADAMARD:
        return hadamard_line(n), embedding
    if scenario == Scenario.LINE_NTILDE:
        return ntilde_line(n), embedding
    if scenario == Scenario.LINE_MIXED:
        return mixed_parity_walk(hadamard_line(n), ntilde_line(n)), embedding
    raise InvalidConfig(f"{scenario.value} is not a line scenario")


def line_initial_state(embedding: LineEmbedding) -> WalkState:
    """(|0>_1|1>_2 + |0>_1|-1>_2) / sqrt(2): the walker sits at node 0."""
    return state_from_amplitudes(
        embedding.n_nodes,
        {
            (0, embedding.to_index(1)): 1.0,
            (0, embedding.to_index(-1)): 1.0,
        },
    )


def run_line(
    scenario: Scenario,
    steps: int,
    record_second: bool = False,
    renorm_every: Optional[int] = None
) -> RunRecord:
    """
    Evolve a line walk from node 0 and record the distribution after every step.

    Distributions are re-indexed to signed line coordinates.

    Raises:
        InvalidConfig: For non-line scenarios or steps < 1
    """
    if steps < 1:
        raise InvalidConfig(f"Line walks need at least one step, got {steps}")

    (g, phases), embedding = line_walk_for(scenario, steps)
    walk = build_walk(g, phases)
    logger.info(f"🔧 {scenario.value}: {steps} steps on a {embedding.n_nodes}-node cycle")

    rows = []
    timer = StepTimer()

    def record(t: int, state: WalkState) -> None:
        if t > 0:
            timer.tick()
        registers = [Register.FIRST, Register.SECOND] if record_second else [Register.FIRST]
        for register in registers:
            coords, probs = embedding.ordered(measure_register(state, register))
            rows.append(checked_row(t, register.value, coords, probs))

    evolve(line_initial_state(embedding), walk, steps, renorm_every=renorm_every, callback=record)

    logger.info(f"✅ {scenario.value} finished")
    return RunRecord(
        scenario=scenario,
        parameters={"steps": steps, "record_second": record_second, "renorm_every": renorm_every},
        version=settings.app_version,
        distributions=rows,
        seconds_per_step=timer.seconds,
        metadata={
            "n_nodes": embedding.n_nodes,
            "coordinate_range": [-(embedding.n_nodes // 2), embedding.n_nodes // 2 - 1],
            "initial_state": "(|0>|1> + |0>|-1>)/sqrt(2)",
        },
    )


def final_distribution(record: RunRecord) -> np.ndarray:
    last = max(row.step for row in record.distributions)
    return np.asarray(record.distribution(last).probabilities)


def compare_line_scenarios(first: Scenario, second: Scenario, steps: int) -> float:
    """Total-variation distance between the final distributions of two line scenarios."""
    return total_variation(
        final_distribution(run_line(first, steps)),
        final_distribution(run_line(second, steps)),
    )
