"""
Record output: CSV with a JSON sidecar, or a single JSON document.

CSV schemas:
    distributions  step,node,probability   (step,register,node,probability when
                                            a second register was recorded)
    search series  step,node,probability   (one row per marked node)
    scaling        size,seconds
"""
from pathlib import Path
from typing import Any, Dict, List, Union
import csv
import io
import json
import logging

from api.services.experiments.models import OutputFormat, RunRecord, Scenario
from lib.atomic_files import write_text_atomic

logger = logging.getLogger(__name__)

SIDECAR_SUFFIX = ".json"


def _csv_text(header: List[str], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def record_to_csv(record: RunRecord) -> str:
    """Render the tabular part of a record."""
    if record.scenario == Scenario.SCALING_BENCH:
        return _csv_text(["size", "seconds"], [[p.size, repr(p.seconds)] for p in record.scaling])

    if record.scenario == Scenario.SEARCH_COMPLETE:
        rows = []
        nodes = record.parameters["marked"]
        for step in range(len(record.series["marked_probability"])):
            for k in nodes:
                rows.append([step, k, repr(record.series[f"node_{k}"][step])])
        return _csv_text(["step", "node", "probability"], rows)

    registers = {row.register for row in record.distributions}
    with_register = len(registers) > 1
    header = ["step", "register", "node", "probability"] if with_register else ["step", "node", "probability"]
    rows = []
    for row in record.distributions:
        for node, p in zip(row.nodes, row.probabilities):
            rows.append([row.step, row.register, node, repr(p)] if with_register else [row.step, node, repr(p)])
    return _csv_text(header, rows)


def record_sidecar(record: RunRecord) -> Dict[str, Any]:
    """Everything in the record except the distribution rows."""
    return record.model_dump(mode="json", exclude={"distributions"})


def write_record(record: RunRecord, path: Union[str, Path], fmt: OutputFormat = OutputFormat.CSV) -> List[Path]:
    """
    Write a record atomically.

    Args:
        record: Run record to write
        path: Output path; relative paths resolve against settings.output_dir
        fmt: csv (table plus `<path>.json` sidecar) or json (whole record)

    Returns:
        List[Path]: Files written
    """
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        text = json.dumps(record.model_dump(mode="json"), indent=2, sort_keys=True)
        written = [write_text_atomic(path, text + "\n")]
    else:
        sidecar = json.dumps(record_sidecar(record), indent=2, sort_keys=True)
        written = [
            write_text_atomic(path, record_to_csv(record)),
            write_text_atomic(f"{path}{SIDECAR_SUFFIX}", sidecar + "\n"),
        ]

    for target in written:
        logger.info(f"💾 Wrote {target}")
    return written
