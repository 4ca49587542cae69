"""Helpers shared by the scenario runners."""

from typing import Optional, Sequence
import time

import numpy as np

from api.config import settings
from api.errors import DistributionDrift
from api.services.experiments.models import DistributionRow


def checked_row(step: int, register: str, nodes: Sequence[int], probabilities) -> DistributionRow:
    """
    Build a distribution row, enforcing that it sums to 1.

    Raises:
        DistributionDrift: If the probabilities do not sum to 1 within tolerance
    """
    probabilities = np.asarray(probabilities, dtype=np.float64)
    check_distribution(step, probabilities)
    return DistributionRow(
        step=step,
        register=register,
        nodes=[int(k) for k in nodes],
        probabilities=probabilities.tolist(),
    )


def check_distribution(step: int, probabilities) -> None:
    total = float(np.sum(probabilities))
    if abs(total - 1.0) > settings.distribution_tolerance:
        raise DistributionDrift(f"Distribution at step {step} sums to {total!r}")


class StepTimer:
    """Wall-clock seconds between consecutive ticks."""

    def __init__(self):
        self._last = time.perf_counter()
        self.seconds = []

    def tick(self) -> None:
        now = time.perf_counter()
        self.seconds.append(now - self._last)
        self._last = now


def total_variation(p, q) -> float:
    """Half the L1 distance between two distributions."""
    return 0.5 * float(np.sum(np.abs(np.asarray(p) - np.asarray(q))))


def first_local_maximum(series: Sequence[float], eps: float = 1e-12) -> Optional[int]:
    """
    Index of the first interior point that rises above its predecessor by more
    than eps and is not exceeded by its successor. None for flat or monotone series.
    """
    for t in range(1, len(series) - 1):
        if series[t] > series[t - 1] + eps and series[t] >= series[t + 1]:
            return t
    return None
