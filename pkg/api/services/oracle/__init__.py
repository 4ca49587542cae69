"""Reference oracle - dense operators for checking the fast kernel."""

from .dense import (
    DenseOperator,
    dense_coined_operator,
    dense_double,
    dense_sigma_doubled,
    dense_swap,
    dense_unitary,
    psi_vectors,
    reduced_indices,
    state_to_vector,
    vector_to_state,
)

__all__ = [
    "DenseOperator",
    "dense_coined_operator",
    "dense_double",
    "dense_sigma_doubled",
    "dense_swap",
    "dense_unitary",
    "psi_vectors",
    "reduced_indices",
    "state_to_vector",
    "vector_to_state",
]
