"""
Exception hierarchy shared by the services, the CLI and the HTTP routers.

Every error belongs to one of two families. Validation failures are the
caller's fault (bad matrices, bad indices, bad configs) and map to exit
code 2 / HTTP 400. Numerical invariant violations mean the engine itself
drifted (norm, distribution sums) and map to exit code 3 / HTTP 500.
"""
from typing import Optional, Sequence


class SimulationError(Exception):
    """Base class for all simulator errors"""

    exit_code: int = 1
    http_status: int = 500


class ValidationFailure(SimulationError):
    exit_code = 2
    http_status = 400


class NumericalInvariantViolation(SimulationError):
    exit_code = 3
    http_status = 500


class DimensionMismatch(ValidationFailure):
    pass


class NotStochastic(ValidationFailure):
    pass


class NotDistribution(ValidationFailure):
    pass


class IsolatedNode(ValidationFailure):
    pass


class TooSmall(ValidationFailure):
    pass


class InvalidNode(ValidationFailure):
    pass


class NotUnitary(ValidationFailure):
    pass


class NotCastable(ValidationFailure):
    """A coin whose -1 eigenspace does not have dimension d_i - 1"""

    def __init__(
        self,
        message: str,
        node: Optional[int] = None,
        eigenvalues: Optional[Sequence[complex]] = None
    ):
        super().__init__(message)
        self.node = node
        self.eigenvalues = list(eigenvalues) if eigenvalues is not None else []


class IncompatibleSupport(ValidationFailure):
    pass


class DimensionLimit(ValidationFailure):
    pass


class TooLarge(ValidationFailure):
    pass


class InvalidConfig(ValidationFailure):
    pass


class UnnormalizedState(NumericalInvariantViolation):
    pass


class NormDrift(NumericalInvariantViolation):
    pass


class DistributionDrift(NumericalInvariantViolation):
    pass
