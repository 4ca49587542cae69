"""Phase configuration: local APR phases and link phases."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from api.errors import DimensionMismatch

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class PhaseConfig:
    """
    APR phases theta (one per node) and link phases phi (one per edge state).

    link[i, j] is the phase attached to the edge state |i>_1|j>_2. APR phases
    are reduced modulo 2*pi at construction.
    """

    apr: NDArray[np.float64]
    link: NDArray[np.float64]

    def __post_init__(self):
        apr = np.asarray(self.apr, dtype=np.float64)
        link = np.asarray(self.link, dtype=np.float64)

        if apr.ndim != 1:
            raise DimensionMismatch(f"APR phases must be a vector, got shape {apr.shape}")
        n = apr.shape[0]
        if link.shape != (n, n):
            raise DimensionMismatch(
                f"Link phases must be {n}x{n} to match {n} APR phases, got shape {link.shape}"
            )

        apr = np.mod(apr, TWO_PI)
        apr.setflags(write=False)
        link = link.copy()
        link.setflags(write=False)
        object.__setattr__(self, "apr", apr)
        object.__setattr__(self, "link", link)

    @property
    def n_nodes(self) -> int:
        return self.apr.shape[0]

    @classmethod
    def standard(cls, n: int) -> "PhaseConfig":
        """theta_i = pi and phi = 0: the plain reflection walk."""
        return cls(apr=np.full(n, np.pi), link=np.zeros((n, n)))

    @classmethod
    def global_apr(cls, n: int, theta: float) -> "PhaseConfig":
        """Same APR phase on every node, no link phases."""
        return cls(apr=np.full(n, float(theta)), link=np.zeros((n, n)))

    def with_apr(self, apr) -> "PhaseConfig":
        return PhaseConfig(apr=np.asarray(apr, dtype=np.float64), link=self.link)

    def with_link(self, link) -> "PhaseConfig":
        return PhaseConfig(apr=self.apr, link=np.asarray(link, dtype=np.float64))
