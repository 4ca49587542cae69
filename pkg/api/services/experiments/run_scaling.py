"""Wall-clock scaling of one single step with N."""

from typing import Optional, Sequence
import logging
import time
import tracemalloc

import numpy as np

from api.config import settings
from api.errors import InvalidConfig
from api.services.experiments.models import RunRecord, Scenario, ScalingPoint
from api.services.graphs.families import random_phase_config, random_transition_matrix
from api.services.walk.build_walk import build_walk
from api.services.walk.state import random_state
from api.services.walk.step import step_single

logger = logging.getLogger(__name__)


def fit_slope(sizes: Sequence[int], seconds: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log(seconds) against log(size); None with fewer than two sizes."""
    if len(sizes) < 2:
        return None
    slope, _ = np.polyfit(np.log(np.asarray(sizes, dtype=float)), np.log(np.asarray(seconds)), 1)
    return float(slope)


def run_scaling(sizes: Sequence[int], seed: int = 0, repeats: int = 5) -> RunRecord:
    """
    Time step_single on a random dense chain for each size.

    Each size reports the best of `repeats` timed steps after one warm-up
    step, plus the peak memory traced during a single step.

    Raises:
        InvalidConfig: If sizes are empty or not strictly ascending
    """
    sizes = [int(s) for s in sizes]
    if not sizes or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InvalidConfig(f"Sizes must be nonempty and strictly ascending, got {sizes}")

    rng = np.random.default_rng(seed)
    points = []
    for n in sizes:
        walk = build_walk(random_transition_matrix(n, rng), random_phase_config(n, rng))
        state = random_state(n, rng)
        state = step_single(state, walk)  # warm-up

        tracemalloc.start()
        step_single(state, walk)
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()

        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            state = step_single(state, walk)
            best = min(best, time.perf_counter() - start)

        logger.info(f"⏱️ N={n}: {best * 1e3:.3f} ms per step, peak {peak / 2**20:.1f} MiB")
        points.append(ScalingPoint(size=n, seconds=best, peak_bytes=int(peak)))

    slope = fit_slope(sizes, [p.seconds for p in points])
    return RunRecord(
        scenario=Scenario.SCALING_BENCH,
        parameters={"sizes": sizes, "seed": seed, "repeats": repeats, "threads": settings.threads},
        version=settings.app_version,
        scaling=points,
        slope=slope,
        metadata={"slope": "undefined (single size)" if slope is None else "log-log least squares"},
    )
