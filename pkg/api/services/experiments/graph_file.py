"""
Graph input format.

    {"n": N,
     "edges": [[i, j, weight], ...],        # jump i -> j, i.e. G[j, i]
     "link_phases": [[i, j, radians], ...], # phase of |i>_1|j>_2 (optional)
     "apr": [theta_0, ..., theta_{N-1}],    # optional, default pi
     "normalize": false}                    # optional: divide columns by their sums

Without "normalize" the columns must already sum to 1.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

import numpy as np

from api.errors import DimensionMismatch, InvalidConfig, InvalidNode, NotStochastic
from api.services.graphs.transition import TransitionMatrix
from api.services.walk.phase_config import PhaseConfig


def _triples(rows: Any, field: str, n: int) -> List[Tuple[int, int, float]]:
    """Parse [[i, j, value], ...] with both indices in [0, n)."""
    try:
        triples = [(int(i), int(j), float(value)) for i, j, value in rows]
    except (TypeError, ValueError) as e:
        raise InvalidConfig(f"'{field}' must be a list of [i, j, value] triples: {e}")

    for i, j, _ in triples:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidNode(f"'{field}' entry ({i}, {j}) outside [0, {n})")
    return triples


def graph_from_dict(data: Dict[str, Any]) -> Tuple[TransitionMatrix, PhaseConfig]:
    """
    Raises:
        InvalidConfig: If required fields are missing or malformed
        InvalidNode: If an edge index is out of range
        NotStochastic: If the columns do not sum to 1 (and normalize is off)
    """
    if not isinstance(data, dict):
        raise InvalidConfig(f"Graph must be a JSON object, got {type(data).__name__}")
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidConfig(f"Graph needs integer 'n' and an 'edges' list: {e}")
    if n < 1:
        raise InvalidConfig(f"Graph needs at least one node, got n={n}")

    g = np.zeros((n, n))
    for i, j, weight in _triples(edges, "edges", n):
        g[j, i] += weight

    if data.get("normalize", False):
        sums = g.sum(axis=0)
        if np.any(sums <= 0):
            raise NotStochastic(f"Node {int(np.argmin(sums))} has no outgoing weight to normalize")
        g = g / sums[np.newaxis, :]

    link = np.zeros((n, n))
    for i, j, radians in _triples(data.get("link_phases", []), "link_phases", n):
        link[i, j] = radians

    try:
        apr = np.asarray(data.get("apr", [np.pi] * n), dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidConfig(f"'apr' must be a list of {n} numbers: {e}")
    if apr.shape != (n,):
        raise DimensionMismatch(f"'apr' must have {n} entries, got {apr.shape}")

    return TransitionMatrix(g=g), PhaseConfig(apr=apr, link=link)


def load_graph_file(path: str) -> Tuple[TransitionMatrix, PhaseConfig]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidConfig(f"Cannot read graph file {path}: {e}")
    return graph_from_dict(data)
