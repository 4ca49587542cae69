"""
Coined-walk data: per-node unitary coins and the neighbor order of their bases.

Coin i acts on span{|(i, k)> : A_ik = 1}; row/column a of the coin matrix is
the directed edge (i, neighbor_order[i][a]). The order is explicit, never
implied: `from_adjacency` uses ascending neighbors, `line_coin_set` puts the
right-pointing edge first.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Tuple
import json

import numpy as np
from numpy.typing import NDArray

from api.errors import DimensionMismatch, InvalidConfig, InvalidNode, NotUnitary
from api.services.graphs.families import cycle_adjacency
from api.services.graphs.transition import AdjacencyMatrix

UNITARY_TOLERANCE = 1e-10

Coin = NDArray[np.complex128]


@dataclass(frozen=True)
class CoinSet:
    coins: Tuple[Coin, ...]
    neighbor_order: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        coins = tuple(np.asarray(c, dtype=np.complex128) for c in self.coins)
        order = tuple(tuple(int(k) for k in nb) for nb in self.neighbor_order)

        if len(coins) != len(order):
            raise DimensionMismatch(f"{len(coins)} coins but {len(order)} neighbor lists")

        for i, (c, nb) in enumerate(zip(coins, order)):
            if c.ndim != 2 or c.shape != (len(nb), len(nb)):
                raise DimensionMismatch(
                    f"Coin {i} has shape {c.shape} but node {i} has {len(nb)} neighbors"
                )
            if len(nb) and np.max(np.abs(c.conj().T @ c - np.eye(len(nb)))) > UNITARY_TOLERANCE:
                raise NotUnitary(f"Coin {i} is not unitary within {UNITARY_TOLERANCE}")

        object.__setattr__(self, "coins", coins)
        object.__setattr__(self, "neighbor_order", order)

    @property
    def n_nodes(self) -> int:
        return len(self.coins)

    def validate_against(self, adjacency: AdjacencyMatrix) -> None:
        """Every neighbor list must be a permutation of the node's adjacency row."""
        if adjacency.n_nodes != self.n_nodes:
            raise DimensionMismatch(
                f"Coin set has {self.n_nodes} nodes but the adjacency has {adjacency.n_nodes}"
            )
        for i, nb in enumerate(self.neighbor_order):
            if sorted(nb) != list(adjacency.neighbors(i)):
                raise DimensionMismatch(
                    f"Neighbor order {list(nb)} of node {i} does not match its adjacency row "
                    f"{list(adjacency.neighbors(i))}"
                )

    @classmethod
    def from_adjacency(cls, coins: Sequence[Coin], adjacency: AdjacencyMatrix) -> "CoinSet":
        """Coins expressed in ascending-neighbor basis order."""
        order = tuple(adjacency.neighbors(i) for i in range(adjacency.n_nodes))
        return cls(coins=tuple(coins), neighbor_order=order)


def pauli_x_coin() -> Coin:
    return np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


def hadamard_coin() -> Coin:
    return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


def ntilde_coin() -> Coin:
    """-(1 + i)/2 [[1, 1], [-1, 1]]: eigenvalues -i and -1."""
    return -(1.0 + 1.0j) / 2.0 * np.array([[1.0, 1.0], [-1.0, 1.0]], dtype=np.complex128)


def grover_coin(d: int) -> Coin:
    """Grover diffusion coin, entries 2/d - delta_ab."""
    if d < 1:
        raise DimensionMismatch(f"Grover coin requires d >= 1 (got {d})")
    return np.full((d, d), 2.0 / d, dtype=np.complex128) - np.eye(d, dtype=np.complex128)


def minus_identity_coin(d: int) -> Coin:
    return -np.eye(d, dtype=np.complex128)


def line_coin_set(coin_for_node: Callable[[int], Coin], n_nodes: int) -> Tuple[CoinSet, AdjacencyMatrix]:
    """
    Coins on an n-node cycle with basis order (i+1, i-1): the right-pointing
    edge is the first basis element at every node, including across the wraparound.
    """
    if n_nodes < 3:
        raise DimensionMismatch(f"Line coins need a cycle of at least 3 nodes, got {n_nodes}")

    order = tuple(((i + 1) % n_nodes, (i - 1) % n_nodes) for i in range(n_nodes))
    coins = tuple(coin_for_node(i) for i in range(n_nodes))
    return CoinSet(coins=coins, neighbor_order=order), cycle_adjacency(n_nodes)


def _parse_matrix(raw: Any) -> Coin:
    """Nested lists of numbers or of [re, im] pairs."""
    try:
        arr = np.asarray(raw, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidConfig(f"Coin matrix must be nested lists of numbers or [re, im] pairs: {e}")
    if arr.ndim == 3 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 2:
        return arr.astype(np.complex128)
    raise DimensionMismatch(f"Coin matrix has unsupported shape {arr.shape}")


def coin_set_from_dict(data: Dict[str, Any]) -> Tuple[CoinSet, AdjacencyMatrix]:
    """
    Parse the coin-set JSON format:

        {"n": N, "edges": [[i, j], ...], "self_loops": [i, ...],
         "coins": [{"node": i, "neighbors": [k, ...], "matrix": [[[re, im], ...], ...]}, ...]}

    Nodes whose entry omits "neighbors" use ascending neighbor order.
    """
    if not isinstance(data, dict):
        raise InvalidConfig(f"Coin set must be a JSON object, got {type(data).__name__}")
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidConfig(f"Coin set needs an integer 'n': {e}")
    if n < 1:
        raise InvalidConfig(f"Coin set needs at least one node, got n={n}")

    try:
        edges = [(int(i), int(j)) for i, j in data.get("edges", [])]
        loops = [int(i) for i in data.get("self_loops", [])]
    except (TypeError, ValueError) as e:
        raise InvalidConfig(f"'edges' must be [i, j] pairs and 'self_loops' node indices: {e}")
    adjacency = AdjacencyMatrix.from_edges(n, edges, loops)

    by_node: Dict[int, Dict[str, Any]] = {}
    for entry in data.get("coins", []):
        try:
            node = int(entry["node"])
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidConfig(f"Every coin entry needs an integer 'node': {e}")
        if not 0 <= node < n:
            raise InvalidNode(f"Coin given for node {node} outside [0, {n})")
        by_node[node] = entry

    missing = [i for i in range(n) if i not in by_node]
    if missing:
        raise DimensionMismatch(f"No coin given for nodes {missing}")

    coins: List[Coin] = []
    order: List[Tuple[int, ...]] = []
    for i in range(n):
        entry = by_node[i]
        if "matrix" not in entry:
            raise InvalidConfig(f"Coin entry for node {i} has no 'matrix'")
        coins.append(_parse_matrix(entry["matrix"]))
        nb = entry.get("neighbors")
        try:
            order.append(tuple(int(k) for k in nb) if nb is not None else adjacency.neighbors(i))
        except (TypeError, ValueError) as e:
            raise InvalidConfig(f"'neighbors' of node {i} must be node indices: {e}")

    coin_set = CoinSet(coins=tuple(coins), neighbor_order=tuple(order))
    coin_set.validate_against(adjacency)
    return coin_set, adjacency


def coin_set_to_dict(coin_set: CoinSet, adjacency: AdjacencyMatrix) -> Dict[str, Any]:
    n = adjacency.n_nodes
    edges = [[i, j] for i in range(n) for j in range(i + 1, n) if adjacency.a[i, j]]
    loops = [i for i in range(n) if adjacency.a[i, i]]
    return {
        "n": n,
        "edges": edges,
        "self_loops": loops,
        "coins": [
            {
                "node": i,
                "neighbors": list(nb),
                "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in c],
            }
            for i, (c, nb) in enumerate(zip(coin_set.coins, coin_set.neighbor_order))
        ],
    }


def load_coin_set(path: str) -> Tuple[CoinSet, AdjacencyMatrix]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidConfig(f"Cannot read coin file {path}: {e}")
    return coin_set_from_dict(data)
