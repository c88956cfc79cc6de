"""GP-UCB over the discrete policy set, with a kernel built from training performance."""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from scipy.spatial.distance import pdist, squareform

from ..core.knowledge import KnowledgeBase
from ..core.signals import EpisodeOutcome
from ..exceptions import SingularKernelError
from ..selection.base import Strategy

logger = logging.getLogger(__name__)

DEFAULT_DELTA = 0.1
JITTER = 1e-8


def performance_kernel(means: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Squared-exponential kernel between policies' training-performance profiles.

    Args:
        means: Expected utility matrix (types x policies)

    Returns:
        (unit-amplitude kernel matrix, length scale)
    """
    profiles = np.asarray(means, dtype=float).T
    distances = pdist(profiles) if len(profiles) > 1 else np.zeros(0)
    positive = distances[distances > 0]
    length = float(np.median(positive)) if positive.size else 1.0
    sq = squareform(distances**2) if len(profiles) > 1 else np.zeros((1, 1))
    return np.exp(-sq / (2.0 * length**2)), length


@dataclass
class GpUcbState:
    """GP posterior over the utility of each policy."""

    kernel: np.ndarray
    prior_mean: float
    noise: float
    delta: float = DEFAULT_DELTA
    observed: List[Tuple[int, float]] = field(default_factory=list)

    @classmethod
    def from_knowledge_base(
        cls, kb: KnowledgeBase, delta: float = DEFAULT_DELTA, noise: Optional[float] = None
    ) -> "GpUcbState":
        """
        Build the kernel and noise level from a trained knowledge base.

        The kernel amplitude is the variance of the trained mean utilities and
        the default noise is the average variance of the performance models, which
        are fitted to the training utilities, floored at the kernel jitter.
        """
        unit, length = performance_kernel(kb.means)
        amplitude = float(np.var(kb.means)) or 1.0
        if noise is None:
            noise = max(float(np.mean([m.variance for row in kb.perf for m in row])), JITTER)
        logger.debug(f"GP-UCB kernel: length {length:.4g}, amplitude {amplitude:.4g}")
        return cls(
            kernel=amplitude * unit, prior_mean=float(kb.means.mean()), noise=noise, delta=delta
        )

    @property
    def n_policies(self) -> int:
        return self.kernel.shape[0]

    def beta(self, t: int) -> float:
        """Exploration coefficient of episode t."""
        return 2.0 * math.log(self.n_policies * t**2 * math.pi**2 / (6.0 * self.delta))

    def _factor(self, matrix: np.ndarray):
        try:
            return cho_factor(matrix, lower=True)
        except LinAlgError:
            logger.warning(f"Kernel of size {len(matrix)} not positive definite, adding jitter")
        try:
            return cho_factor(matrix + JITTER * np.eye(len(matrix)), lower=True)
        except LinAlgError as e:
            raise SingularKernelError(len(matrix), JITTER) from e

    def posterior(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Posterior mean and standard deviation at every policy.

        Raises:
            SingularKernelError: If the kernel cannot be factorised even with jitter
        """
        prior_sd = np.sqrt(np.diag(self.kernel))
        if not self.observed:
            return np.full(self.n_policies, self.prior_mean), prior_sd
        idx = np.array([p for p, _ in self.observed])
        y = np.array([r for _, r in self.observed]) - self.prior_mean
        k_xx = self.kernel[np.ix_(idx, idx)] + self.noise * np.eye(len(idx))
        k_sx = self.kernel[:, idx]
        factor = self._factor(k_xx)
        mean = self.prior_mean + k_sx @ cho_solve(factor, y)
        solved = cho_solve(factor, k_sx.T)
        var = np.diag(self.kernel) - np.einsum("ij,ji->i", k_sx, solved)
        return mean, np.sqrt(np.clip(var, 0.0, None))

    def select(self, t: int) -> int:
        mean, sd = self.posterior()
        return int(np.argmax(mean + math.sqrt(self.beta(t)) * sd))

    def update(self, policy: int, reward: float) -> None:
        self.observed.append((int(policy), float(reward)))


def gpucb_select(state: GpUcbState, t: int) -> int:
    """Policy with the highest GP upper confidence bound at episode t."""
    return state.select(t)


def gpucb_update(state: GpUcbState, policy: int, reward: float) -> None:
    """Add one (policy, reward) observation."""
    state.update(policy, reward)


class GpUcbStrategy(Strategy):
    """GP-UCB over the library, ignoring the belief."""

    def __init__(
        self, name: str = "gpucb", delta: float = DEFAULT_DELTA, noise: float | None = None
    ):
        super().__init__(name)
        self.delta = delta
        self.noise = noise
        self.state: GpUcbState | None = None

    def reset(self, kb: KnowledgeBase) -> None:
        self.state = GpUcbState.from_knowledge_base(kb, self.delta, self.noise)

    def select(self, kb, belief, t, horizon, rng) -> int:
        if self.state is None:
            self.reset(kb)
        return gpucb_select(self.state, t)

    def observe(self, policy: int, outcome: EpisodeOutcome) -> None:
        gpucb_update(self.state, policy, outcome.utility)
