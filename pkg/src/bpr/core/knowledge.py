"""Knowledge base of trained performance and observation models."""

import logging
import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, Hashable, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from ..exceptions import DimensionMismatchError, InvalidBeliefError
from ..records import SignalKind
from .belief import Belief
from .distributions import ObservationModel, PerformanceModel
from .signals import EpisodicReturn, ScalarReal, Signal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypeInfo:
    """A previously-solved type and the task it was trained on."""

    label: str
    task: float


@dataclass(frozen=True)
class PolicyInfo:
    """A library policy and its index in the domain's policy set."""

    index: int
    name: str


@dataclass(frozen=True, eq=False)
class KnowledgeBase:
    """
    Trained models for every (type, policy) pair plus the prior over types.

    ``perf[t][p]`` and ``obs[t][p]`` are the performance and observation
    models of policy ``p`` on type ``t``. The instance is immutable; derived
    matrices are computed lazily and shared between concurrent readers.
    """

    domain: str
    signal_kind: SignalKind
    types: Tuple[TypeInfo, ...]
    policies: Tuple[PolicyInfo, ...]
    perf: Tuple[Tuple[PerformanceModel, ...], ...]
    obs: Tuple[Tuple[ObservationModel, ...], ...]
    prior: Belief
    utility_range: Tuple[float, float] = (0.0, 1.0)
    _memo: Dict[Hashable, Any] = field(default_factory=dict, repr=False, compare=False)
    _memo_lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        n, m = len(self.types), len(self.policies)
        if len(self.perf) != n or len(self.obs) != n:
            raise DimensionMismatchError("model rows", n, min(len(self.perf), len(self.obs)))
        for row_p, row_o in zip(self.perf, self.obs):
            if len(row_p) != m or len(row_o) != m:
                raise DimensionMismatchError("model columns", m, min(len(row_p), len(row_o)))
        if len(self.prior) != n:
            raise InvalidBeliefError(f"Prior has {len(self.prior)} entries for {n} types")

    @property
    def n_types(self) -> int:
        return len(self.types)

    @property
    def n_policies(self) -> int:
        return len(self.policies)

    @property
    def shares_models(self) -> bool:
        """True when the episodic return doubles as the signal."""
        return self.signal_kind is SignalKind.RETURN

    @cached_property
    def means(self) -> np.ndarray:
        """Matrix of E[U | type, policy], shape (types, policies)."""
        mat = np.array([[m.mean for m in row] for row in self.perf], dtype=float)
        mat = mat.reshape(self.n_types, self.n_policies)
        mat.setflags(write=False)
        return mat

    @cached_property
    def perf_gaussian(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        """(mean, sd) matrices when every performance model is Gaussian."""
        return _gaussian_matrices(self.perf)

    @cached_property
    def obs_gaussian(self) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        """(mean, sd) matrices when every observation model is Gaussian."""
        return _gaussian_matrices(self.obs)

    def best_response(self, type_index: int) -> int:
        """Library policy with the highest expected utility on one type."""
        return int(np.argmax(self.means[type_index]))

    def cdf(self, u: float) -> np.ndarray:
        """Matrix of F(u | type, policy)."""
        if self.perf_gaussian is not None:
            mu, sd = self.perf_gaussian
            return norm.cdf(u, loc=mu, scale=sd)
        return np.array([[m.cdf(u) for m in row] for row in self.perf], dtype=float).reshape(
            self.n_types, self.n_policies
        )

    def log_likelihoods(self, policy: int, signal: Signal) -> np.ndarray:
        """
        Log-likelihood of a signal under every type for one policy.

        Args:
            policy: Library policy index
            signal: Observed signal

        Returns:
            Vector of length n_types
        """
        if self.obs_gaussian is not None and isinstance(signal, (ScalarReal, EpisodicReturn)):
            mu, sd = self.obs_gaussian
            return norm.logpdf(signal.value, loc=mu[:, policy], scale=sd[:, policy])
        return np.array([row[policy].log_likelihood(signal) for row in self.obs], dtype=float)

    def likelihoods(self, policy: int, signal: Signal) -> np.ndarray:
        """Likelihood of a signal under every type for one policy."""
        return np.exp(self.log_likelihoods(policy, signal))

    def memo(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Get a derived quantity or compute and store it.

        Args:
            key: Cache key
            factory: Function computing the value on a miss

        Returns:
            Cached value
        """
        value = self._memo.get(key)
        if value is not None:
            return value
        logger.debug(f"Knowledge base memo miss: {key}")
        value = factory()
        with self._memo_lock:
            return self._memo.setdefault(key, value)

    def restrict(
        self, type_indices: Sequence[int], policy_indices: Sequence[int]
    ) -> "KnowledgeBase":
        """
        Sub-library over a subset of types and policies.

        The prior is the original prior restricted and renormalized, or uniform
        if the kept types had no prior mass.

        Args:
            type_indices: Types to keep, in order
            policy_indices: Policies to keep, in order

        Returns:
            New knowledge base sharing the original model objects
        """
        types = tuple(self.types[i] for i in type_indices)
        policies = tuple(self.policies[j] for j in policy_indices)
        perf = tuple(tuple(self.perf[i][j] for j in policy_indices) for i in type_indices)
        obs = tuple(tuple(self.obs[i][j] for j in policy_indices) for i in type_indices)
        weights = self.prior.weights[list(type_indices)]
        prior = (
            Belief.from_weights(weights) if weights.sum() > 0 else Belief.uniform(len(types))
        )
        return KnowledgeBase(
            domain=self.domain,
            signal_kind=self.signal_kind,
            types=types,
            policies=policies,
            perf=perf,
            obs=obs,
            prior=prior,
            utility_range=self.utility_range,
        )


def _gaussian_matrices(models) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    params = [[m.gaussian_params() for m in row] for row in models]
    if not params or not params[0] or any(p is None for row in params for p in row):
        return None
    arr = np.array(params, dtype=float)
    mu, sd = arr[..., 0], arr[..., 1]
    mu.setflags(write=False)
    sd.setflags(write=False)
    return mu, sd
