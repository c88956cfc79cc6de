"""The train, run, compare and sweep commands."""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import aiofiles
import numpy as np

from ..cache import UtilityOracle
from ..config import ExperimentConfig
from ..core.knowledge import KnowledgeBase
from ..core.loop import run_bpr
from ..domains import Domain, build_domain
from ..exceptions import KnowledgeBaseIOError
from ..models import read_kb, train_offline, write_kb
from ..records import RunTrace, SweepCell, TrainingReport, aggregate_curves
from ..selection import StrategyConfig, build_strategy
from ..utils import derive_rng
from .output import (
    CURVE_COLUMNS,
    RUN_COLUMNS,
    SWEEP_COLUMNS,
    curve_rows,
    sweep_rows,
    trace_rows,
    write_csv,
)
from .runner import ExperimentRunner

logger = logging.getLogger(__name__)

PAIRED_LIBRARY_DOMAINS = ("telephone", "surveillance")


def make_domain(config: ExperimentConfig) -> Domain:
    """Instantiate the configured domain."""
    options = dict(config.domain.options)
    if config.domain.utility_range is not None:
        options["utility_range"] = config.domain.utility_range
    return build_domain(config.domain.name, config.domain.signal_kind, **options)


def train(config: ExperimentConfig, domain: Domain) -> Tuple[KnowledgeBase, TrainingReport]:
    """Train a knowledge base on the domain's training types."""
    return train_offline(
        domain,
        episodes_per_pair=config.models.episodes_per_pair,
        seed=config.harness.seed,
        alpha=config.models.smoothing_alpha,
        sd_floor=config.models.sd_floor,
        prior=config.models.prior,
    )


def sample_library(
    kb: KnowledgeBase, fraction: float, rng: np.random.Generator, paired: bool
) -> KnowledgeBase:
    """
    Random sub-library holding a fraction of the policies.

    When types and policies correspond one to one (each policy is the solution
    of its type) the same subset of types is kept.

    Args:
        kb: Full knowledge base
        fraction: Fraction of the library to keep
        rng: Stream choosing the subset
        paired: Whether policy i is the solution of type i

    Returns:
        Restricted knowledge base
    """
    if fraction >= 1.0:
        return kb
    size = max(1, int(round(fraction * kb.n_policies)))
    chosen = sorted(int(i) for i in rng.choice(kb.n_policies, size=size, replace=False))
    types = chosen if paired else list(range(kb.n_types))
    return kb.restrict(types, chosen)


def task_set(config: ExperimentConfig, domain: Domain, n: int) -> List[float]:
    """Evaluation tasks shared by every strategy."""
    seed = config.harness.seed
    return [domain.sample_task(derive_rng(seed, "task", i)) for i in range(n)]


async def cmd_train(config: ExperimentConfig) -> Path:
    """
    Train and save a knowledge base plus its training report.

    Returns:
        Path of the knowledge-base file
    """
    domain = make_domain(config)
    kb, report = train(config, domain)
    path = config.harness.kb_file()
    path.parent.mkdir(parents=True, exist_ok=True)
    await write_kb(kb, path)
    report_path = Path(config.harness.output) / "training_report.json"
    report_path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(report_path, "w", encoding="utf-8") as f:
        await f.write(report.model_dump_json(indent=2))
    logger.info(f"Training report written to {report_path}")
    return path


async def obtain_kb(config: ExperimentConfig, domain: Domain) -> KnowledgeBase:
    """Load the configured knowledge base, or train one in memory if the file is missing."""
    path = config.harness.kb_file()
    if path.exists():
        kb = await read_kb(path)
        if kb.domain != domain.name or kb.signal_kind is not domain.signal_kind:
            raise KnowledgeBaseIOError(
                str(path),
                f"trained for {kb.domain}/{kb.signal_kind.value}, "
                f"config asks for {domain.name}/{domain.signal_kind.value}",
            )
        return kb
    logger.warning(f"Knowledge base {path} not found, training in memory")
    kb, _ = train(config, domain)
    return kb


async def _run_strategies(
    config: ExperimentConfig,
    domain: Domain,
    kb: KnowledgeBase,
    strategies: Sequence[StrategyConfig],
) -> Dict[str, List[RunTrace]]:
    seed = config.harness.seed
    tasks = task_set(config, domain, config.harness.tasks)
    library = sample_library(
        kb,
        config.harness.library_fraction,
        derive_rng(seed, "library"),
        domain.name in PAIRED_LIBRARY_DOMAINS,
    )
    oracle = UtilityOracle(seed=seed, episodes=config.harness.oracle_episodes)
    runner = ExperimentRunner(config.harness.max_workers)

    def unit(strategy_config: StrategyConfig, task_id: int, task: float):
        return lambda: run_bpr(
            library,
            domain,
            task,
            build_strategy(strategy_config),
            config.harness.episodes,
            derive_rng(seed, "run", task_id),
            oracle=oracle,
            task_id=task_id,
            seed=seed,
        )

    units = {
        (s_index, task_id): unit(s, task_id, task)
        for s_index, s in enumerate(strategies)
        for task_id, task in enumerate(tasks)
    }
    results = await runner.run(units)
    by_strategy: Dict[str, List[RunTrace]] = {s.name: [] for s in strategies}
    for trace in results:
        by_strategy[trace.strategy].append(trace)
    return by_strategy


async def cmd_run(config: ExperimentConfig, kb: Optional[KnowledgeBase] = None) -> Path:
    """
    Run the first configured strategy on the evaluation tasks.

    Writes ``run_traces.csv`` (one row per task and episode) and
    ``run_summary.csv`` (per-episode means over tasks).

    Returns:
        Path of the trace CSV
    """
    domain = make_domain(config)
    kb = kb or await obtain_kb(config, domain)
    strategies = config.selection.strategies
    strategy = strategies[0]
    traces = (await _run_strategies(config, domain, kb, [strategy]))[strategy.name]

    out = Path(config.harness.output)
    path = await write_csv(out / "run_traces.csv", "run", RUN_COLUMNS, trace_rows(traces))
    curves = aggregate_curves(strategy.name, traces)
    await write_csv(out / "run_summary.csv", "run-summary", CURVE_COLUMNS, curve_rows(curves))
    regrets = np.mean([t.average_regret() for t in traces])
    logger.info(f"{strategy.name}: average library regret {regrets:.4g} over {len(traces)} tasks")
    return path


async def cmd_compare(config: ExperimentConfig, kb: Optional[KnowledgeBase] = None) -> Path:
    """
    Run every configured strategy on the same evaluation tasks.

    Writes ``compare.csv`` (per-strategy curves) and ``compare_traces.csv``
    (the run rows of every strategy, prefixed by the strategy name).

    Returns:
        Path of the curve CSV
    """
    domain = make_domain(config)
    kb = kb or await obtain_kb(config, domain)
    strategies = config.selection.strategies
    by_strategy = await _run_strategies(config, domain, kb, strategies)

    out = Path(config.harness.output)
    curves = []
    for s in strategies:
        traces = by_strategy[s.name]
        curves.extend(aggregate_curves(s.name, traces))
        logger.info(
            f"{s.name}: average library regret "
            f"{np.mean([t.average_regret() for t in traces]):.4g}"
        )
    path = await write_csv(out / "compare.csv", "compare", CURVE_COLUMNS, curve_rows(curves))
    traces = [t for s in strategies for t in by_strategy[s.name]]
    await write_csv(
        out / "compare_traces.csv",
        "compare-traces",
        ["strategy", *RUN_COLUMNS],
        trace_rows(traces, with_strategy=True),
    )
    return path


async def cmd_sweep(config: ExperimentConfig, kb: Optional[KnowledgeBase] = None) -> Path:
    """
    Mean regret over a grid of library fractions and horizons.

    The full knowledge base is trained once; every trial restricts it to a
    random sub-library and runs every configured strategy on a task from the
    whole task space. Regret is measured against the best policy of the
    whole domain so that smaller libraries pay for their missing policies.
    Tasks, sub-libraries and run streams depend only on the trial index, so
    every strategy and every cell sees the same tasks.

    Returns:
        Path of the sweep CSV
    """
    domain = make_domain(config)
    kb = kb or await obtain_kb(config, domain)
    h = config.harness
    strategies = config.selection.strategies
    paired = domain.name in PAIRED_LIBRARY_DOMAINS
    oracle = UtilityOracle(seed=h.seed, episodes=h.oracle_episodes)
    runner = ExperimentRunner(h.max_workers)
    reference = [p.index for p in domain.policies]
    tasks = [domain.sample_task(derive_rng(h.seed, "sweep-task", i)) for i in range(h.sweep_trials)]

    def unit(strategy: StrategyConfig, fraction: float, episodes: int, trial: int):
        def work() -> float:
            library = sample_library(
                kb, fraction, derive_rng(h.seed, "sweep-library", fraction, trial), paired
            )
            trace = run_bpr(
                library,
                domain,
                tasks[trial],
                build_strategy(strategy),
                episodes,
                derive_rng(h.seed, "sweep-run", trial),
                oracle=oracle,
                task_id=trial,
                seed=h.seed,
                reference=reference,
            )
            return trace.average_regret()

        return work

    units = {
        (s_index, fraction, episodes, trial): unit(s, fraction, episodes, trial)
        for s_index, s in enumerate(strategies)
        for fraction in h.sweep_fractions
        for episodes in h.sweep_episodes
        for trial in range(h.sweep_trials)
    }
    results = await runner.run(units)

    cells = []
    keys = sorted(units)
    for s_index, s in enumerate(strategies):
        for fraction in sorted(h.sweep_fractions):
            for episodes in sorted(h.sweep_episodes):
                cell = (s_index, fraction, episodes)
                values = [r for k, r in zip(keys, results) if k[:3] == cell]
                cells.append(
                    SweepCell(
                        strategy=s.name,
                        library_fraction=fraction,
                        episodes=episodes,
                        mean_regret=float(np.mean(values)),
                        std_regret=float(np.std(values)),
                        n_trials=len(values),
                    )
                )
    path = await write_csv(
        Path(h.output) / "sweep.csv", "sweep", SWEEP_COLUMNS, sweep_rows(cells)
    )
    return path
