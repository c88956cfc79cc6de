"""UCB1 seeded with the expected performance of every arm under the prior."""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.belief import expected_utilities
from ..core.knowledge import KnowledgeBase
from ..core.signals import EpisodeOutcome
from ..selection.base import Strategy

logger = logging.getLogger(__name__)


@dataclass
class Ucb1State:
    """
    Pull counts and reward sums of every arm, rewards rescaled to [0, 1].

    Each arm starts with one virtual pull at its prior mean, so every index
    is finite from the first step.
    """

    counts: np.ndarray
    sums: np.ndarray
    prior_means: np.ndarray
    utility_range: Tuple[float, float] = (0.0, 1.0)

    @classmethod
    def from_prior(cls, prior_means, utility_range: Tuple[float, float]) -> "Ucb1State":
        """Seed one virtual pull per arm at its rescaled prior mean."""
        state = cls(
            counts=np.ones(len(prior_means)),
            sums=np.zeros(len(prior_means)),
            prior_means=np.zeros(len(prior_means)),
            utility_range=utility_range,
        )
        state.prior_means = np.array([state.rescale(u) for u in prior_means])
        state.sums = state.prior_means.copy()
        return state

    @property
    def t(self) -> int:
        return int(self.counts.sum())

    @property
    def means(self) -> np.ndarray:
        return self.sums / self.counts

    def rescale(self, utility: float) -> float:
        low, high = self.utility_range
        if high <= low:
            return 0.0
        return min(1.0, max(0.0, (utility - low) / (high - low)))

    def indices(self) -> np.ndarray:
        return self.means + np.sqrt(2.0 * math.log(self.t) / self.counts)

    def select(self) -> int:
        return int(np.argmax(self.indices()))

    def update(self, arm: int, utility: float) -> None:
        self.counts[arm] += 1
        self.sums[arm] += self.rescale(utility)


def ucb1_select(state: Ucb1State) -> int:
    """Arm with the highest upper confidence bound."""
    return state.select()


def ucb1_update(state: Ucb1State, arm: int, reward: float) -> None:
    """Add one pull with the given (unscaled) reward to an arm."""
    state.update(arm, reward)


class Ucb1Strategy(Strategy):
    """UCB1 over the library, ignoring the belief."""

    def __init__(self, name: str = "ucb1"):
        super().__init__(name)
        self.state: Ucb1State | None = None

    def reset(self, kb: KnowledgeBase) -> None:
        self.state = Ucb1State.from_prior(expected_utilities(kb, kb.prior), kb.utility_range)

    def select(self, kb, belief, t, horizon, rng) -> int:
        if self.state is None:
            self.reset(kb)
        return ucb1_select(self.state)

    def observe(self, policy: int, outcome: EpisodeOutcome) -> None:
        ucb1_update(self.state, policy, outcome.utility)
