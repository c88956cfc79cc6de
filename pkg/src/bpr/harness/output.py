"""CSV artefacts written by the harness commands."""

import logging
from pathlib import Path
from typing import Iterable, List, Sequence

import aiofiles

from ..records import CurvePoint, RunTrace, SweepCell
from ..utils import format_number

logger = logging.getLogger(__name__)

CSV_SCHEMA = "bpr-csv-1"

RUN_COLUMNS = ["task_id", "episode", "policy", "utility", "regret", "entropy", "seed"]
CURVE_COLUMNS = [
    "strategy",
    "episode",
    "mean_regret",
    "std_regret",
    "mean_entropy",
    "std_entropy",
    "mean_utility",
    "mean_abs_utility",
    "std_abs_utility",
    "n_tasks",
]
SWEEP_COLUMNS = [
    "strategy",
    "library_fraction",
    "episodes",
    "mean_regret",
    "std_regret",
    "n_trials",
]


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return format_number(value)


def render_csv(kind: str, columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Render a versioned CSV document."""
    lines = [f"# schema: {CSV_SCHEMA} {kind}", ",".join(columns)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


async def write_csv(path: str | Path, kind: str, columns: Sequence[str], rows) -> Path:
    """
    Write a versioned CSV file.

    Args:
        path: Destination file
        kind: Artefact kind recorded in the schema line
        columns: Header row
        rows: Row values (numbers are printed with 6 significant digits)

    Returns:
        Path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(render_csv(kind, columns, rows))
    logger.info(f"Wrote {path}")
    return path


def trace_rows(traces: Iterable[RunTrace], with_strategy: bool = False) -> List[list]:
    """One row per (task, episode)."""
    rows = []
    for trace in traces:
        for e in trace.episodes:
            row = [trace.task_id, e.episode, e.policy, e.utility, e.regret, e.entropy, trace.seed]
            rows.append([trace.strategy, *row] if with_strategy else row)
    return rows


def curve_rows(points: Iterable[CurvePoint]) -> List[list]:
    return [[getattr(p, c) for c in CURVE_COLUMNS] for p in points]


def sweep_rows(cells: Iterable[SweepCell]) -> List[list]:
    return [[getattr(c, col) for col in SWEEP_COLUMNS] for c in cells]
