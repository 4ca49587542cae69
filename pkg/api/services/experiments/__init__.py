"""Experiment services - scenario runners, run records and output files."""

from .models import (
    LINE_SCENARIOS,
    TIMING_FIELDS,
    DistributionRow,
    ExperimentConfig,
    OutputFormat,
    RunRecord,
    ScalingPoint,
    Scenario,
    SearchMode,
)
from .recording import check_distribution, checked_row, first_local_maximum, total_variation
from .graph_file import graph_from_dict, load_graph_file
from .run_line import compare_line_scenarios, final_distribution, line_initial_state, line_walk_for, run_line
from .run_search import run_search, search_walk
from .run_scaling import fit_slope, run_scaling
from .run_classical_check import run_classical_check
from .run_custom import run_custom
from .runner import load_config_graph, run_experiment
from .writers import record_sidecar, record_to_csv, write_record

__all__ = [
    "LINE_SCENARIOS",
    "TIMING_FIELDS",
    "DistributionRow",
    "ExperimentConfig",
    "OutputFormat",
    "RunRecord",
    "ScalingPoint",
    "Scenario",
    "SearchMode",
    "check_distribution",
    "checked_row",
    "first_local_maximum",
    "total_variation",
    "graph_from_dict",
    "load_graph_file",
    "compare_line_scenarios",
    "final_distribution",
    "line_initial_state",
    "line_walk_for",
    "run_line",
    "run_search",
    "search_walk",
    "fit_slope",
    "run_scaling",
    "run_classical_check",
    "run_custom",
    "load_config_graph",
    "run_experiment",
    "record_sidecar",
    "record_to_csv",
    "write_record",
]
