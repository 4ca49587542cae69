"""Scenario dispatch: ExperimentConfig -> RunRecord."""

import logging

import numpy as np

from api.errors import InvalidConfig, InvalidNode
from api.services.experiments.graph_file import graph_from_dict, load_graph_file
from api.services.experiments.models import LINE_SCENARIOS, ExperimentConfig, RunRecord, Scenario
from api.services.experiments.run_classical_check import run_classical_check
from api.services.experiments.run_custom import run_custom
from api.services.experiments.run_line import run_line
from api.services.experiments.run_scaling import run_scaling
from api.services.experiments.run_search import run_search
from api.services.graphs.families import cycle_graph

logger = logging.getLogger(__name__)


def load_config_graph(config: ExperimentConfig):
    """(TransitionMatrix, PhaseConfig) from the inline graph or the graph file."""
    if config.graph is not None:
        return graph_from_dict(config.graph)
    if config.graph_file is not None:
        return load_graph_file(config.graph_file)
    raise InvalidConfig(f"{config.scenario.value} needs a graph")


def run_experiment(config: ExperimentConfig) -> RunRecord:
    """
    Run the scenario a config describes.

    Raises:
        ValidationFailure: On bad inputs (exit code 2)
        NumericalInvariantViolation: If the engine drifts (exit code 3)
    """
    scenario = config.scenario
    logger.info(f"🚶 Running scenario {scenario.value}")

    if scenario in LINE_SCENARIOS:
        return run_line(
            scenario,
            config.steps,
            record_second=config.record_second,
            renorm_every=config.renorm_every,
        )

    if scenario == Scenario.SEARCH_COMPLETE:
        return run_search(
            config.n_nodes,
            config.marked,
            config.steps,
            mode=config.mode,
            renorm_every=config.renorm_every,
        )

    if scenario == Scenario.SCALING_BENCH:
        return run_scaling(config.sizes, seed=config.seed, repeats=config.repeats)

    if scenario == Scenario.CLASSICAL_CHECK:
        if config.graph is None and config.graph_file is None:
            g = cycle_graph(config.n_nodes)
        else:
            g, _ = load_config_graph(config)
        if config.p0_node >= g.n_nodes:
            raise InvalidNode(f"p0 node {config.p0_node} outside [0, {g.n_nodes})")
        p0 = np.zeros(g.n_nodes)
        p0[config.p0_node] = 1.0
        return run_classical_check(g, p0, config.steps)

    if scenario == Scenario.CUSTOM:
        g, phases = load_config_graph(config)
        return run_custom(
            g,
            phases,
            config.steps,
            record_second=config.record_second,
            renorm_every=config.renorm_every,
        )

    raise InvalidConfig(f"Unknown scenario {scenario}")
