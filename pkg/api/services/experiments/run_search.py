"""Marked-node search on the complete graph with the double Szegedy operator."""

from typing import Iterable, Optional
import logging

import numpy as np

from api.config import settings
from api.services.experiments.models import RunRecord, Scenario, SearchMode
from api.services.experiments.recording import StepTimer, check_distribution, first_local_maximum
from api.services.graphs.families import complete_graph
from api.services.graphs.marking import absorb, mark_apr, t_max_prediction
from api.services.graphs.transition import MarkedSet
from api.services.walk.build_walk import SzegedyWalk, build_walk
from api.services.walk.measure import Register, initial_uniform_psi, measure_register
from api.services.walk.phase_config import PhaseConfig
from api.services.walk.state import WalkState
from api.services.walk.step import evolve_double

logger = logging.getLogger(__name__)


def search_walk(n: int, marked: MarkedSet, mode: SearchMode) -> SzegedyWalk:
    """Walk used for both halves of the double step."""
    g = complete_graph(n)
    if SearchMode(mode) == SearchMode.APR:
        phases = PhaseConfig(apr=mark_apr(n, marked), link=np.zeros((n, n)))
        return build_walk(g, phases)
    return build_walk(absorb(g, marked), PhaseConfig.standard(n))


def run_search(
    n: int,
    marked: Iterable[int],
    t_max_steps: int,
    mode: SearchMode = SearchMode.APR,
    renorm_every: Optional[int] = None
) -> RunRecord:
    """
    Probability of measuring a marked node after each double step.

    The initial state is the uniform psi superposition of the unmarked
    complete graph. Marked nodes use APR phase 0 (mode apr) or become
    absorbing vertices (mode absorb).

    Raises:
        InvalidNode: If the marked set is empty or out of range
        TooSmall: If n < 2
    """
    marked_set = MarkedSet(nodes=frozenset(marked), mark_phase=0.0)
    marked_set.validate(n)
    nodes = list(marked_set.sorted_nodes())
    if n <= 2 * len(nodes):
        logger.warning(f"⚠️ Search with n={n} and M={len(nodes)} is outside the n > 2M regime")

    initial = initial_uniform_psi(build_walk(complete_graph(n), PhaseConfig.standard(n)))
    walk = search_walk(n, marked_set, mode)
    logger.info(f"🔧 Search on K_{n} with {len(nodes)} marked nodes, mode {SearchMode(mode).value}")

    total = []
    per_node = {k: [] for k in nodes}
    timer = StepTimer()

    def record(t: int, state: WalkState) -> None:
        if t > 0:
            timer.tick()
        p = measure_register(state, Register.FIRST)
        check_distribution(t, p)
        total.append(float(p[nodes].sum()))
        for k in nodes:
            per_node[k].append(float(p[k]))

    evolve_double(initial, walk, walk, t_max_steps, renorm_every=renorm_every, callback=record)

    series = {"marked_probability": total}
    series.update({f"node_{k}": v for k, v in per_node.items()})

    peak = first_local_maximum(total)
    prediction = t_max_prediction(n, len(nodes))
    logger.info(f"✅ Search finished: first maximum at {peak}, predicted {prediction:.2f}")

    return RunRecord(
        scenario=Scenario.SEARCH_COMPLETE,
        parameters={
            "n_nodes": n,
            "marked": nodes,
            "steps": t_max_steps,
            "mode": SearchMode(mode).value,
            "renorm_every": renorm_every,
        },
        version=settings.app_version,
        step_unit="double_step",
        series=series,
        seconds_per_step=timer.seconds,
        metadata={
            "t_max_prediction": prediction,
            "t_max_rounded": int(round(prediction)),
            "observed_first_maximum": peak,
            "measured_register": Register.FIRST.value,
        },
    )
