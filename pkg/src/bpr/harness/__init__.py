"""Experiment orchestration: commands, concurrent runner and CSV output."""

from .commands import (
    cmd_compare,
    cmd_run,
    cmd_sweep,
    cmd_train,
    make_domain,
    obtain_kb,
    sample_library,
    task_set,
    train,
)
from .output import CSV_SCHEMA, CURVE_COLUMNS, RUN_COLUMNS, SWEEP_COLUMNS, render_csv, write_csv
from .runner import ExperimentRunner

__all__ = [
    "CSV_SCHEMA",
    "CURVE_COLUMNS",
    "ExperimentRunner",
    "RUN_COLUMNS",
    "SWEEP_COLUMNS",
    "cmd_compare",
    "cmd_run",
    "cmd_sweep",
    "cmd_train",
    "make_domain",
    "obtain_kb",
    "render_csv",
    "sample_library",
    "task_set",
    "train",
    "write_csv",
]
