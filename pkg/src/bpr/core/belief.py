"""Belief over known types and the regret metrics built on it."""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import entropy as _entropy

from ..exceptions import (
    AllLikelihoodsZeroError,
    DimensionMismatchError,
    EmptySequenceError,
    InvalidBeliefError,
)

logger = logging.getLogger(__name__)

SUM_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Belief:
    """Probability vector over the types of a knowledge base."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise InvalidBeliefError(f"Belief must be a non-empty vector, got shape {w.shape}")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InvalidBeliefError("Belief weights must be finite and non-negative")
        total = float(w.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise InvalidBeliefError(
                f"Belief weights sum to {total:.12g}, expected 1",
                {"sum": total},
            )
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n: int) -> "Belief":
        """Uniform belief over n types."""
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def point_mass(cls, n: int, index: int) -> "Belief":
        """Belief putting all mass on one type."""
        w = np.zeros(n)
        w[index] = 1.0
        return cls(w)

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "Belief":
        """
        Normalize non-negative weights into a belief.

        Raises:
            InvalidBeliefError: If the weights are negative or all zero
        """
        w = np.asarray(weights, dtype=float)
        total = w.sum()
        if np.any(w < 0) or not np.isfinite(total) or total <= 0:
            raise InvalidBeliefError("Weights must be non-negative with positive total mass")
        return cls(w / total)

    def __len__(self) -> int:
        return self.weights.size

    def entropy(self) -> float:
        return belief_entropy(self)


def bayes_update(belief: Belief, likelihoods: Sequence[float], policy: int = -1) -> Belief:
    """
    Multiply a belief by per-type likelihoods and renormalize.

    Args:
        belief: Current belief
        likelihoods: Non-negative likelihood of the observed signal under every type
        policy: Policy that produced the signal (for error reporting)

    Returns:
        Posterior belief

    Raises:
        DimensionMismatchError: If the lengths differ
        AllLikelihoodsZeroError: If no type keeps positive mass
    """
    lik = np.asarray(likelihoods, dtype=float)
    with np.errstate(divide="ignore"):
        return bayes_update_log(belief, np.log(lik), policy)


def bayes_update_log(belief: Belief, log_likelihoods: np.ndarray, policy: int = -1) -> Belief:
    """Same as :func:`bayes_update` with likelihoods given in log space."""
    log_lik = np.asarray(log_likelihoods, dtype=float)
    if log_lik.shape != belief.weights.shape:
        raise DimensionMismatchError("likelihoods", len(belief), log_lik.size)

    with np.errstate(divide="ignore"):
        log_post = np.log(belief.weights) + log_lik
    top = np.max(log_post)
    if not np.isfinite(top):
        raise AllLikelihoodsZeroError(policy)
    post = np.exp(log_post - top)
    return Belief(post / post.sum())


def update_belief(kb, belief: Belief, policy: int, signal) -> Belief:
    """
    Posterior over types after observing a signal from one policy.

    Args:
        kb: Knowledge base holding the observation models
        belief: Belief the policy was selected under
        policy: Library index of the executed policy
        signal: Observed signal

    Returns:
        New belief; the input is left untouched
    """
    if len(belief) != kb.n_types:
        raise DimensionMismatchError("belief", kb.n_types, len(belief))
    log_lik = kb.log_likelihoods(policy, signal)
    try:
        return bayes_update_log(belief, log_lik, policy)
    except AllLikelihoodsZeroError as e:
        raise AllLikelihoodsZeroError(policy, signal.summary()) from e


def belief_entropy(belief: Belief) -> float:
    """Shannon entropy of a belief in nats (0 log 0 = 0)."""
    return float(_entropy(belief.weights))


def expected_utility(kb, belief: Belief, policy: int) -> float:
    """Expected utility of one policy under a belief."""
    return float(belief.weights @ kb.means[:, policy])


def expected_utilities(kb, belief: Belief) -> np.ndarray:
    """Expected utility of every library policy under a belief."""
    return belief.weights @ kb.means


def library_regret(best_utility: float, chosen_utility: float) -> float:
    """Utility gap between the hindsight-best policy and the chosen one."""
    return best_utility - chosen_utility


def average_library_regret(per_episode: Sequence[float]) -> float:
    """
    Average of per-episode library regrets.

    Raises:
        EmptySequenceError: If no episodes are given
    """
    values = np.asarray(per_episode, dtype=float)
    if values.size == 0:
        raise EmptySequenceError("Cannot average regret over zero episodes")
    return float(values.mean())


def epsilon_equivalent(
    utilities_i: Sequence[float], utilities_j: Sequence[float], eps: float
) -> bool:
    """
    Whether two tasks are within eps of each other under every library policy.

    Raises:
        DimensionMismatchError: If the utility vectors have different lengths
    """
    a = np.asarray(utilities_i, dtype=float)
    b = np.asarray(utilities_j, dtype=float)
    if a.shape != b.shape:
        raise DimensionMismatchError("utility vectors", a.size, b.size)
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    return bool(np.max(np.abs(a - b), initial=0.0) <= eps)
