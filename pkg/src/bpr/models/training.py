"""Offline training: run every library policy on every known type and fit models."""

import logging
from typing import Optional, Sequence, Tuple

from ..core.belief import Belief
from ..core.distributions import ObservationModel, PerformanceModel
from ..core.knowledge import KnowledgeBase, PolicyInfo, TypeInfo
from ..exceptions import BPRError, ConfigError, DomainFailureError
from ..records import SignalKind, TrainingReport
from ..utils import derive_rng
from .families import (
    DEFAULT_ALPHA,
    DEFAULT_SD_FLOOR,
    CategoricalModel,
    GaussianModel,
    HistogramModel,
    TraceModel,
)
from .persistence import storage_size

logger = logging.getLogger(__name__)


def fit_pair(
    domain, batch, alpha: float = DEFAULT_ALPHA, sd_floor: float = DEFAULT_SD_FLOOR
) -> Tuple[PerformanceModel, ObservationModel]:
    """
    Fit the performance and observation model of one (type, policy) pair.

    Args:
        domain: Domain that produced the batch (declares model families)
        batch: Simulated episodes of the pair
        alpha: Laplace smoothing of discrete models
        sd_floor: Lower bound on Gaussian standard deviations

    Returns:
        (performance model, observation model); the same object when the
        episodic return is the signal
    """
    kind = domain.signal_kind
    if domain.performance_family == CategoricalModel.family:
        perf = CategoricalModel.fit(batch.utilities, domain.utility_values, alpha)
    else:
        emits = SignalKind.RETURN if kind is SignalKind.RETURN else SignalKind.SCALAR
        perf = GaussianModel.fit(batch.utilities, sd_floor, emits)

    if kind is SignalKind.RETURN:
        return perf, perf
    if kind is SignalKind.CATEGORY:
        edges = domain.bin_edges
        return perf, HistogramModel.fit(batch.signals, len(edges) + 1, alpha, edges)
    if kind is SignalKind.SCALAR:
        return perf, GaussianModel.fit(batch.signals, sd_floor)
    return perf, TraceModel.fit(kind, batch.signals, domain.trace_outcomes(kind), alpha)


def train_offline(
    domain,
    types: Optional[Sequence[TypeInfo]] = None,
    policies: Optional[Sequence[PolicyInfo]] = None,
    episodes_per_pair: int = 1000,
    seed: int = 0,
    alpha: float = DEFAULT_ALPHA,
    sd_floor: float = DEFAULT_SD_FLOOR,
    prior: Optional[Sequence[float]] = None,
) -> Tuple[KnowledgeBase, TrainingReport]:
    """
    Build a knowledge base by simulating every library policy on every type.

    Each pair draws from its own stream keyed by (seed, task, policy), so the
    fitted model of a pair does not depend on which other pairs are trained.

    Args:
        domain: Simulated domain
        types: Known types (defaults to the domain's training types)
        policies: Library (defaults to every domain policy)
        episodes_per_pair: Episodes simulated per pair
        seed: Master seed
        alpha: Laplace smoothing of discrete models
        sd_floor: Lower bound on Gaussian standard deviations
        prior: Prior weights over types (uniform if omitted)

    Returns:
        (knowledge base, training report)

    Raises:
        ConfigError: If episodes_per_pair < 1 or the library is empty
        DomainFailureError: If the domain fails while simulating
    """
    if episodes_per_pair < 1:
        raise ConfigError("models", f"episodes_per_pair must be >= 1, got {episodes_per_pair}")
    types = tuple(types if types is not None else domain.training_types())
    policies = tuple(policies if policies is not None else domain.policies)
    if not types or not policies:
        raise ConfigError("models", "training needs at least one type and one policy")

    logger.info(
        f"Training {domain.name} ({domain.signal_kind.value}): {len(types)} types x "
        f"{len(policies)} policies x {episodes_per_pair} episodes"
    )
    perf_rows, obs_rows, counts = [], [], []
    for t in types:
        perf_row, obs_row, count_row = [], [], []
        for p in policies:
            rng = derive_rng(seed, "train", domain.name, t.task, p.index)
            try:
                batch = domain.simulate(t.task, p.index, episodes_per_pair, rng)
            except BPRError:
                raise
            except Exception as e:
                raise DomainFailureError(
                    domain.name, str(e), {"task": t.task, "policy": p.index}
                ) from e
            perf, obs = fit_pair(domain, batch, alpha, sd_floor)
            perf_row.append(perf)
            obs_row.append(obs)
            count_row.append(len(batch))
        perf_rows.append(tuple(perf_row))
        obs_rows.append(tuple(obs_row))
        counts.append(count_row)
        logger.debug(f"Trained type {t.label}")

    kb = KnowledgeBase(
        domain=domain.name,
        signal_kind=domain.signal_kind,
        types=types,
        policies=policies,
        perf=tuple(perf_rows),
        obs=tuple(obs_rows),
        prior=Belief.from_weights(prior) if prior is not None else Belief.uniform(len(types)),
        utility_range=domain.utility_range,
    )
    report = TrainingReport(
        domain=domain.name,
        signal_kind=domain.signal_kind,
        episodes_per_pair=episodes_per_pair,
        sample_counts=counts,
        storage=storage_size(kb),
    )
    logger.info(
        f"Training finished: observation models {report.storage.observation_total()} bytes, "
        f"performance models {report.storage.performance_total()} bytes"
    )
    return kb, report
