"""Data records for Bayesian Policy Reuse runs and artefacts."""

from enum import Enum
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from .exceptions import EmptySequenceError


class SignalKind(str, Enum):
    """Signal kind enumeration."""

    TRANSITION = "sas"
    REWARD = "sar"
    RETURN = "u"
    SCALAR = "scalar"
    CATEGORY = "category"


class EpisodeRecord(BaseModel):
    """One episode of an online run."""

    episode: int = Field(..., description="Episode index t (1-based)")
    policy: int = Field(..., description="Chosen library policy index")
    utility: float = Field(..., description="Realised utility of the episode")
    signal: str = Field(..., description="Short summary of the observed signal")
    entropy: float = Field(..., description="Entropy (nats) of the selection belief")
    regret: float = Field(..., description="Instantaneous library regret on the true task")


class RunTrace(BaseModel):
    """Full trace of one online run on one task."""

    task_id: int = Field(..., description="Index of the task within the experiment")
    task: float = Field(..., description="Task parameter (hole distance, user model, location)")
    seed: int = Field(..., description="Master seed of the experiment")
    strategy: str = Field(..., description="Selection strategy name")
    best_policy: int = Field(..., description="Hindsight-best library policy on the task")
    episodes: List[EpisodeRecord] = Field(default_factory=list, description="Per-episode records")

    def regrets(self) -> np.ndarray:
        """Instantaneous regret per episode."""
        return np.array([e.regret for e in self.episodes], dtype=float)

    def entropies(self) -> np.ndarray:
        """Belief entropy per episode."""
        return np.array([e.entropy for e in self.episodes], dtype=float)

    def utilities(self) -> np.ndarray:
        """Realised utility per episode."""
        return np.array([e.utility for e in self.episodes], dtype=float)

    def policies(self) -> List[int]:
        """Chosen policy per episode."""
        return [e.policy for e in self.episodes]

    def average_regret(self) -> float:
        """
        Average library regret over the run.

        Raises:
            EmptySequenceError: If the trace has no episodes
        """
        if not self.episodes:
            raise EmptySequenceError("Cannot average regret of an empty trace")
        return float(self.regrets().mean())


class StorageReport(BaseModel):
    """Serialized model sizes of a knowledge base, in bytes."""

    header: int = Field(..., description="Bytes of the document without any model")
    observation: Dict[str, int] = Field(
        default_factory=dict, description="Observation-model bytes per model family"
    )
    performance: Dict[str, int] = Field(
        default_factory=dict,
        description="Performance-model bytes per family (empty when shared with observation)",
    )

    def observation_total(self) -> int:
        """Total bytes of observation models."""
        return sum(self.observation.values())

    def performance_total(self) -> int:
        """Total bytes of performance models."""
        return sum(self.performance.values())


class TrainingReport(BaseModel):
    """Summary of one offline training pass."""

    domain: str = Field(..., description="Domain name")
    signal_kind: SignalKind = Field(..., description="Signal kind the observation models use")
    episodes_per_pair: int = Field(..., description="Episodes run per (type, policy) pair")
    sample_counts: List[List[int]] = Field(
        default_factory=list, description="Samples collected per [type][policy]"
    )
    storage: Optional[StorageReport] = Field(None, description="Serialized model sizes")


class CurvePoint(BaseModel):
    """Aggregate of one strategy at one episode over many tasks."""

    strategy: str = Field(..., description="Strategy name")
    episode: int = Field(..., description="Episode index t (1-based)")
    mean_regret: float = Field(..., description="Mean regret over tasks")
    std_regret: float = Field(..., description="Standard deviation of regret over tasks")
    mean_entropy: float = Field(..., description="Mean belief entropy over tasks")
    std_entropy: float = Field(..., description="Standard deviation of entropy over tasks")
    mean_utility: float = Field(..., description="Mean realised utility over tasks")
    mean_abs_utility: float = Field(..., description="Mean absolute realised utility over tasks")
    std_abs_utility: float = Field(..., description="Standard deviation of absolute utility")
    n_tasks: int = Field(..., description="Number of tasks aggregated")


class SweepCell(BaseModel):
    """One cell of the library-size by horizon grid."""

    strategy: str = Field(..., description="Strategy name")
    library_fraction: float = Field(..., description="Library size as a fraction of the task space")
    episodes: int = Field(..., description="Horizon K")
    mean_regret: float = Field(..., description="Mean episodic regret over trials")
    std_regret: float = Field(..., description="Standard deviation over trials")
    n_trials: int = Field(..., description="Number of trials averaged")


def aggregate_curves(strategy: str, traces: List[RunTrace]) -> List[CurvePoint]:
    """
    Average per-episode regret, entropy and utility over runs of one strategy.

    Args:
        strategy: Strategy name
        traces: Runs sharing the same horizon

    Returns:
        One point per episode

    Raises:
        EmptySequenceError: If no traces are given
    """
    if not traces:
        raise EmptySequenceError(f"No traces to aggregate for strategy '{strategy}'")
    regrets = np.vstack([t.regrets() for t in traces])
    entropies = np.vstack([t.entropies() for t in traces])
    utilities = np.vstack([t.utilities() for t in traces])
    points = []
    for k in range(regrets.shape[1]):
        points.append(
            CurvePoint(
                strategy=strategy,
                episode=k + 1,
                mean_regret=float(regrets[:, k].mean()),
                std_regret=float(regrets[:, k].std()),
                mean_entropy=float(entropies[:, k].mean()),
                std_entropy=float(entropies[:, k].std()),
                mean_utility=float(utilities[:, k].mean()),
                mean_abs_utility=float(np.abs(utilities[:, k]).mean()),
                std_abs_utility=float(np.abs(utilities[:, k]).std()),
                n_tasks=len(traces),
            )
        )
    return points
