"""Shared fixtures for the simulator tests"""
import numpy as np
import pytest

from api.services.graphs import TransitionMatrix

G4 = np.array([
    [0.7, 0.3, 0.4, 0.0],
    [0.0, 0.0, 0.6, 0.0],
    [0.3, 0.7, 0.0, 0.7],
    [0.0, 0.0, 0.0, 0.3],
])

A4 = np.array([
    [1, 1, 1, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 1],
    [0, 0, 1, 1],
])


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.fixture
def g4():
    return TransitionMatrix(g=G4)


def max_diff(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
