"""Graph model services - classical chains, graph families and marking."""

from .transition import (
    TransitionMatrix,
    AdjacencyMatrix,
    MarkedSet,
    as_transition_matrix,
    validate_distribution,
)
from .classical_evolve import classical_evolve, classical_trajectory
from .normalize_adjacency import normalize_adjacency
from .families import (
    complete_graph,
    cycle_adjacency,
    cycle_graph,
    random_transition_matrix,
    random_phase_config,
)
from .lines import (
    H_LEFT,
    H_RIGHT,
    LineEmbedding,
    biased_line,
    embedding_size,
    hadamard_line,
    line_embedding,
    mixed_parity_walk,
    ntilde_line,
    x_line,
)
from .marking import absorb, mark_apr, t_max_prediction

__all__ = [
    "TransitionMatrix",
    "AdjacencyMatrix",
    "MarkedSet",
    "as_transition_matrix",
    "validate_distribution",
    "classical_evolve",
    "classical_trajectory",
    "normalize_adjacency",
    "complete_graph",
    "cycle_adjacency",
    "cycle_graph",
    "random_transition_matrix",
    "random_phase_config",
    "H_LEFT",
    "H_RIGHT",
    "LineEmbedding",
    "biased_line",
    "embedding_size",
    "hadamard_line",
    "line_embedding",
    "mixed_parity_walk",
    "ntilde_line",
    "x_line",
    "absorb",
    "mark_apr",
    "t_max_prediction",
]
