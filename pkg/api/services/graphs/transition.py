"""
Classical-side domain types: transition matrices, adjacency matrices and
marked node sets.

Transition matrices are column-stochastic: g[j, i] is the probability of
jumping from node i to node j.
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from api.config import settings
from api.errors import DimensionMismatch, InvalidNode, NotDistribution, NotStochastic


@dataclass(frozen=True)
class TransitionMatrix:
    """Column-stochastic nonnegative N x N matrix of a classical Markov chain."""

    g: NDArray[np.float64]

    def __post_init__(self):
        g = np.array(self.g, dtype=np.float64)

        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] == 0:
            raise DimensionMismatch(f"Transition matrix must be square and nonempty, got shape {g.shape}")
        if not np.all(np.isfinite(g)):
            raise NotStochastic("Transition matrix has non-finite entries")
        if np.any(g < 0):
            i, j = np.argwhere(g < 0)[0]
            raise NotStochastic(f"Transition matrix has negative entry {g[i, j]} at ({i}, {j})")

        sums = g.sum(axis=0)
        bad = np.flatnonzero(np.abs(sums - 1.0) > settings.stochastic_tolerance)
        if bad.size:
            raise NotStochastic(
                f"Column {bad[0]} of the transition matrix sums to {sums[bad[0]]!r}, expected 1"
            )

        g.setflags(write=False)
        object.__setattr__(self, "g", g)

    @property
    def n_nodes(self) -> int:
        return self.g.shape[0]

    def column(self, i: int) -> NDArray[np.float64]:
        return self.g[:, i]


@dataclass(frozen=True)
class AdjacencyMatrix:
    """
    0/1 adjacency matrix. Diagonal entries are self-loops.

    When `symmetric` is set the matrix must equal its transpose (undirected graph).
    """

    a: NDArray[np.int64]
    symmetric: bool = True

    def __post_init__(self):
        a = np.array(self.a)

        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionMismatch(f"Adjacency matrix must be square and nonempty, got shape {a.shape}")
        if not np.all((a == 0) | (a == 1)):
            raise DimensionMismatch("Adjacency matrix entries must be 0 or 1")

        a = a.astype(np.int64)
        if self.symmetric and not np.array_equal(a, a.T):
            raise DimensionMismatch("Adjacency matrix flagged symmetric but a != a.T")

        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @property
    def n_nodes(self) -> int:
        return self.a.shape[0]

    def neighbors(self, i: int) -> Tuple[int, ...]:
        """Ascending list of nodes k with a[i, k] = 1."""
        return tuple(int(k) for k in np.flatnonzero(self.a[i]))

    def degree(self, i: int) -> int:
        return int(self.a[i].sum())

    @classmethod
    def from_edges(
        cls,
        n: int,
        pairs: Iterable[Tuple[int, int]],
        self_loops: Iterable[int] = ()
    ) -> "AdjacencyMatrix":
        """Undirected adjacency from node pairs plus optional self-loops."""
        a = np.zeros((n, n), dtype=np.int64)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidNode(f"Edge ({i}, {j}) outside [0, {n})")
            a[i, j] = 1
            a[j, i] = 1
        for i in self_loops:
            if not 0 <= i < n:
                raise InvalidNode(f"Self-loop node {i} outside [0, {n})")
            a[i, i] = 1
        return cls(a=a, symmetric=True)

    @classmethod
    def backbone(cls, g: TransitionMatrix) -> "AdjacencyMatrix":
        """Undirected graph underlying a weighted one: an edge wherever either direction has mass."""
        support = (g.g > 0)
        return cls(a=(support | support.T).astype(np.int64), symmetric=True)


@dataclass(frozen=True)
class MarkedSet:
    """Nodes to mark and the APR phase they evolve with."""

    nodes: FrozenSet[int] = field(default_factory=frozenset)
    mark_phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(int(k) for k in self.nodes))

    def validate(self, n: int, require_nonempty: bool = True) -> None:
        if require_nonempty and not self.nodes:
            raise InvalidNode("Marked set is empty")
        bad = sorted(k for k in self.nodes if not 0 <= k < n)
        if bad:
            raise InvalidNode(f"Marked nodes {bad} outside [0, {n})")

    def sorted_nodes(self) -> Tuple[int, ...]:
        return tuple(sorted(self.nodes))

    def __len__(self) -> int:
        return len(self.nodes)


def as_transition_matrix(g) -> TransitionMatrix:
    """Accept either a TransitionMatrix or a raw array."""
    if isinstance(g, TransitionMatrix):
        return g
    return TransitionMatrix(g=np.asarray(g, dtype=np.float64))


def validate_distribution(p, n: Optional[int] = None, tol: Optional[float] = None) -> NDArray[np.float64]:
    """Return p as a float vector, raising NotDistribution if it is not a probability vector."""
    tol = settings.stochastic_tolerance if tol is None else tol
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1 or (n is not None and p.shape[0] != n):
        raise NotDistribution(f"Expected a length-{n} probability vector, got shape {p.shape}")
    if np.any(p < 0) or not np.all(np.isfinite(p)):
        raise NotDistribution("Probability vector has negative or non-finite entries")
    if abs(p.sum() - 1.0) > tol:
        raise NotDistribution(f"Probability vector sums to {p.sum()!r}, expected 1")
    return p
