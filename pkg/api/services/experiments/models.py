"""
Experiment configuration and run records.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class Scenario(str, Enum):
    LINE_X = "line-x"
    LINE_HADAMARD = "line-hadamard"
    LINE_NTILDE = "line-ntilde"
    LINE_MIXED = "line-mixed"
    SEARCH_COMPLETE = "search-complete"
    CLASSICAL_CHECK = "classical-check"
    SCALING_BENCH = "scaling-bench"
    CUSTOM = "custom"


LINE_SCENARIOS = (
    Scenario.LINE_X,
    Scenario.LINE_HADAMARD,
    Scenario.LINE_NTILDE,
    Scenario.LINE_MIXED,
)


class SearchMode(str, Enum):
    APR = "apr"
    ABSORB = "absorb"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class ExperimentConfig(BaseModel):
    scenario: Scenario
    steps: int = Field(default=100, ge=0)
    n_nodes: Optional[int] = Field(default=None, ge=1)
    marked: List[int] = Field(default_factory=list)
    mode: SearchMode = SearchMode.APR
    seed: int = 0
    sizes: List[int] = Field(default_factory=lambda: [256, 512, 1024])
    repeats: int = Field(default=5, ge=1)
    graph_file: Optional[str] = None
    graph: Optional[Dict[str, Any]] = None
    p0_node: int = Field(default=0, ge=0)
    record_second: bool = False
    renorm_every: Optional[int] = Field(default=None, ge=1)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV

    @model_validator(mode="after")
    def check_scenario_parameters(self) -> "ExperimentConfig":
        """Scenario-specific completeness, checked before anything runs"""
        if self.scenario in LINE_SCENARIOS and self.steps < 1:
            raise ValueError("Line scenarios need at least one step")

        if self.scenario == Scenario.SEARCH_COMPLETE:
            if self.n_nodes is None:
                raise ValueError("search-complete needs n_nodes")
            if not self.marked:
                raise ValueError("search-complete needs at least one marked node")
            if len(set(self.marked)) != len(self.marked):
                raise ValueError("Marked nodes must be distinct")
            if self.n_nodes <= 2 * len(self.marked):
                raise ValueError(
                    f"search-complete needs n > 2M, got n={self.n_nodes} and M={len(self.marked)}"
                )
            if any(not 0 <= k < self.n_nodes for k in self.marked):
                raise ValueError(f"Marked nodes must lie in [0, {self.n_nodes})")

        if self.scenario == Scenario.SCALING_BENCH:
            if not self.sizes:
                raise ValueError("scaling-bench needs at least one size")
            if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
                raise ValueError("scaling-bench sizes must be strictly ascending")

        if self.scenario == Scenario.CUSTOM and self.graph is None and self.graph_file is None:
            raise ValueError("custom needs a graph (inline or graph_file)")

        if self.scenario == Scenario.CLASSICAL_CHECK:
            if self.graph is None and self.graph_file is None and self.n_nodes is None:
                raise ValueError("classical-check needs a graph or n_nodes")

        return self


class DistributionRow(BaseModel):
    step: int
    register: str
    nodes: List[int]
    probabilities: List[float]


class ScalingPoint(BaseModel):
    size: int
    seconds: float
    peak_bytes: Optional[int] = None


class RunRecord(BaseModel):
    scenario: Scenario
    parameters: Dict[str, Any]
    version: str
    step_unit: str = "single_step"
    distributions: List[DistributionRow] = Field(default_factory=list)
    series: Dict[str, List[float]] = Field(default_factory=dict)
    scaling: List[ScalingPoint] = Field(default_factory=list)
    slope: Optional[float] = None
    seconds_per_step: List[float] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    def distribution(self, step: int, register: str = "first") -> DistributionRow:
        for row in self.distributions:
            if row.step == step and row.register == register:
                return row
        raise KeyError(f"No {register}-register distribution recorded for step {step}")


# Timing fields are excluded from determinism comparisons
TIMING_FIELDS = {"seconds_per_step", "scaling", "slope"}
