"""Cache of true expected utilities used to score regret."""

import logging
import threading
from typing import Dict, Optional, Protocol, Sequence, Tuple

import numpy as np

from .utils import derive_rng

logger = logging.getLogger(__name__)

MONTE_CARLO_EPISODES = 100_000


class UtilitySource(Protocol):
    """What the oracle needs from a domain."""

    name: str

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        """Closed-form E[U | task, policy], or None if unavailable."""

    def run_episode(self, task: float, policy: int, rng: np.random.Generator):
        """Execute one episode."""


class UtilityOracle:
    """Get-or-compute cache of E[U | task, policy] per domain."""

    def __init__(self, seed: int = 0, episodes: int = MONTE_CARLO_EPISODES):
        """
        Initialize oracle.

        Args:
            seed: Seed of the Monte Carlo fallback streams
            episodes: Monte Carlo episodes per (task, policy) when no closed form exists
        """
        self.seed = seed
        self.episodes = episodes
        self._cache: Dict[Tuple[str, float, int], float] = {}
        self._lock = threading.Lock()

    def get(self, domain: UtilitySource, task: float, policy: int) -> float:
        """
        Get cached expected utility or compute it.

        Args:
            domain: Domain the task belongs to
            task: Task parameter
            policy: Domain policy index

        Returns:
            Expected utility of the policy on the task
        """
        key = (domain.name, float(task), int(policy))
        cached = self._cache.get(key)
        if cached is not None:
            logger.debug(f"Cache hit for expected utility: {key}")
            return cached

        logger.debug(f"Cache miss for expected utility: {key}, computing...")
        value = domain.expected_utility(task, policy)
        if value is None:
            value = self._monte_carlo(domain, task, policy)
        with self._lock:
            return self._cache.setdefault(key, float(value))

    def get_many(self, domain: UtilitySource, task: float, policies: Sequence[int]) -> np.ndarray:
        """Expected utilities of several policies on one task."""
        return np.array([self.get(domain, task, p) for p in policies], dtype=float)

    def _monte_carlo(self, domain: UtilitySource, task: float, policy: int) -> float:
        rng = derive_rng(self.seed, "oracle", domain.name, float(task), int(policy))
        total = 0.0
        for _ in range(self.episodes):
            total += domain.run_episode(task, policy, rng).utility
        return total / self.episodes

    def clear(self) -> None:
        """Drop every cached value."""
        with self._lock:
            self._cache.clear()

    def __len__(self) -> int:
        return len(self._cache)
