"""Adjacency normalization: the unbiased classical walk on an undirected graph."""

import numpy as np

from api.errors import IsolatedNode
from api.services.graphs.transition import AdjacencyMatrix, TransitionMatrix


def normalize_adjacency(adjacency: AdjacencyMatrix) -> TransitionMatrix:
    """
    Divide each column of the adjacency matrix by the node degree.

    G[j, i] = A[j, i] / d_i, where d_i is the column sum. Isolated nodes are
    rejected; callers decide whether to add self-loops.

    Raises:
        IsolatedNode: If a column is all zeros
    """
    a = adjacency.a.astype(np.float64)
    degrees = a.sum(axis=0)

    isolated = np.flatnonzero(degrees == 0)
    if isolated.size:
        raise IsolatedNode(f"Node {isolated[0]} has no edges; cannot normalize its column")

    return TransitionMatrix(g=a / degrees[np.newaxis, :])
