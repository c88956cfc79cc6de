"""Base class of the simulated evaluation domains."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, List, Optional, Sequence, Tuple

import numpy as np

from ..core.knowledge import PolicyInfo, TypeInfo
from ..core.signals import (
    CategoryBin,
    EpisodeOutcome,
    EpisodicReturn,
    RewardTrace,
    ScalarReal,
    TransitionTrace,
)
from ..exceptions import ConfigError
from ..records import SignalKind

logger = logging.getLogger(__name__)


@dataclass
class EpisodeBatch:
    """Raw signals and utilities of many episodes of one (task, policy) pair."""

    utilities: np.ndarray
    signals: Sequence[Any] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.utilities)

    @classmethod
    def from_outcomes(cls, outcomes: Sequence[EpisodeOutcome]) -> "EpisodeBatch":
        """Unwrap signal payloads (bin ids, reals or trace steps)."""
        return cls(
            utilities=np.array([o.utility for o in outcomes], dtype=float),
            signals=[_payload(o.signal) for o in outcomes],
        )


def _payload(signal) -> Any:
    if isinstance(signal, CategoryBin):
        return signal.bin
    if isinstance(signal, (ScalarReal, EpisodicReturn)):
        return signal.value
    if isinstance(signal, (TransitionTrace, RewardTrace)):
        return signal.steps
    raise TypeError(f"Unknown signal type {type(signal).__name__}")


class Domain(ABC):
    """
    A simulated environment with a policy library and a task space.

    Tasks are plain floats (hole distance, user model, poacher location).
    Policies are addressed by their index in :attr:`policies`.
    """

    name: ClassVar[str]
    supported_kinds: ClassVar[Tuple[SignalKind, ...]]
    performance_family: ClassVar[str] = "gaussian"
    utility_values: ClassVar[Tuple[float, ...]] = ()
    bin_edges: ClassVar[Tuple[float, ...]] = ()

    def __init__(self, signal_kind: SignalKind, utility_range: Tuple[float, float]):
        """
        Initialize domain.

        Args:
            signal_kind: Signal kind emitted by episodes
            utility_range: (U_min, U_max) used to scale exploration terms

        Raises:
            ConfigError: If the domain cannot emit the signal kind
        """
        if signal_kind not in self.supported_kinds:
            raise ConfigError(
                "domain",
                f"{self.name} does not emit '{signal_kind.value}' signals "
                f"(supported: {', '.join(k.value for k in self.supported_kinds)})",
            )
        self.signal_kind = signal_kind
        self.utility_range = (float(utility_range[0]), float(utility_range[1]))

    @property
    @abstractmethod
    def policies(self) -> Tuple[PolicyInfo, ...]:
        """Every policy the domain offers."""

    @property
    def n_policies(self) -> int:
        return len(self.policies)

    @abstractmethod
    def training_types(self) -> List[TypeInfo]:
        """Previously-solved types the knowledge base is trained on."""

    @abstractmethod
    def sample_task(self, rng: np.random.Generator) -> float:
        """Draw one online task from the task space."""

    @abstractmethod
    def run_episode(self, task: float, policy: int, rng: np.random.Generator) -> EpisodeOutcome:
        """Execute one policy on one task instance."""

    def simulate(
        self, task: float, policy: int, n: int, rng: np.random.Generator
    ) -> EpisodeBatch:
        """Run n independent episodes of one (task, policy) pair."""
        return EpisodeBatch.from_outcomes([self.run_episode(task, policy, rng) for _ in range(n)])

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        """Closed-form E[U | task, policy]; None when only sampling is available."""
        return None

    def trace_outcomes(self, kind: SignalKind) -> Tuple[Any, ...]:
        """Declared outcome set of trace steps (next states or rewards)."""
        raise ConfigError("domain", f"{self.name} has no '{kind.value}' trace signals")

    def best_policy(self, task: float) -> int:
        """Domain policy with the highest closed-form expected utility on a task."""
        values = [self.expected_utility(task, p.index) for p in self.policies]
        if any(v is None for v in values):
            raise NotImplementedError(f"{self.name} has no closed-form expected utility")
        return int(np.argmax(values))
