"""Classical Markov-chain trajectory, for cross-checking chains."""

from api.config import settings
from api.services.experiments.models import RunRecord, Scenario
from api.services.experiments.recording import checked_row
from api.services.graphs.classical_evolve import classical_trajectory
from api.services.graphs.transition import TransitionMatrix


def run_classical_check(g: TransitionMatrix, p0, t: int) -> RunRecord:
    """Record p(0), ..., p(t) under G."""
    nodes = list(range(g.n_nodes))
    trajectory = classical_trajectory(g, p0, t)
    return RunRecord(
        scenario=Scenario.CLASSICAL_CHECK,
        parameters={"n_nodes": g.n_nodes, "steps": t, "p0": [float(x) for x in trajectory[0]]},
        version=settings.app_version,
        distributions=[checked_row(step, "classical", nodes, p) for step, p in enumerate(trajectory)],
    )
