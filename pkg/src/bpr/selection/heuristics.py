"""Policy selection rules mapping (knowledge base, belief) to a library policy.

Every argmax or argmin resolves ties to the lowest policy index.
"""

import logging
import math
from typing import Optional

import numpy as np

from ..core.belief import Belief, expected_utilities
from ..core.knowledge import KnowledgeBase
from .lookahead import knowledge_gradient, posterior_entropy

logger = logging.getLogger(__name__)


def select_greedy(kb: KnowledgeBase, belief: Belief) -> int:
    """Policy with the highest expected utility under the belief."""
    return int(np.argmax(expected_utilities(kb, belief)))


def select_eps_greedy(
    kb: KnowledgeBase, belief: Belief, epsilon: float, rng: np.random.Generator
) -> int:
    """Greedy with probability 1 - epsilon, uniformly random otherwise."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    if rng.random() < epsilon:
        return int(rng.integers(kb.n_policies))
    return select_greedy(kb, belief)


def select_sample_belief(kb: KnowledgeBase, belief: Belief, rng: np.random.Generator) -> int:
    """Best response to a type drawn from the belief."""
    sampled = int(rng.choice(kb.n_types, p=belief.weights))
    return kb.best_response(sampled)


def best_expected_utility(kb: KnowledgeBase, belief: Belief) -> float:
    """U-bar: the best expected utility any library policy offers under the belief."""
    return float(expected_utilities(kb, belief).max())


def default_u_plus(kb: KnowledgeBase, belief: Belief, u_max: Optional[float] = None) -> float:
    """Threshold halfway between U-bar and the utility cap."""
    cap = kb.utility_range[1] if u_max is None else u_max
    u_bar = best_expected_utility(kb, belief)
    return u_bar + 0.5 * (cap - u_bar)


def improvement_probabilities(kb: KnowledgeBase, belief: Belief, u_plus: float) -> np.ndarray:
    """P(U > U+) per policy under the belief."""
    return belief.weights @ (1.0 - kb.cdf(u_plus))


def select_pi(
    kb: KnowledgeBase,
    belief: Belief,
    u_plus: Optional[float] = None,
    u_max: Optional[float] = None,
) -> int:
    """
    Probability of improvement.

    Args:
        kb: Knowledge base
        belief: Current belief
        u_plus: Utility to beat (halfway to the cap if omitted)
        u_max: Utility cap used for the default threshold

    Returns:
        Policy with the largest tail mass above U+
    """
    if u_plus is None:
        u_plus = default_u_plus(kb, belief, u_max)
    elif u_plus <= best_expected_utility(kb, belief):
        logger.warning(f"PI threshold {u_plus:g} does not exceed the best expected utility")
    return int(np.argmax(improvement_probabilities(kb, belief, u_plus)))


def select_ei(kb: KnowledgeBase, belief: Belief, u_max: Optional[float] = None) -> int:
    """
    Expected improvement: probability mass between U-bar and the utility cap.

    Args:
        kb: Knowledge base
        belief: Current belief
        u_max: Integration cap; without one the integral runs to the top of
            every model and the rule is the policy least likely to fall short of U-bar

    Returns:
        Policy with the most mass in (U-bar, u_max]
    """
    u_bar = best_expected_utility(kb, belief)
    shortfall = belief.weights @ kb.cdf(u_bar)
    if u_max is None:
        return int(np.argmin(shortfall))
    if u_max <= u_bar:
        logger.warning(f"EI cap {u_max:g} does not exceed the best expected utility")
    return int(np.argmax(belief.weights @ kb.cdf(u_max) - shortfall))


def default_kappa(kb: KnowledgeBase, scale: float = 1.0) -> float:
    """Entropy weight making one nat worth the utility range divided by log N."""
    low, high = kb.utility_range
    if kb.n_types < 2:
        return scale * (high - low)
    return scale * (high - low) / math.log(kb.n_types)


def posterior_entropies(
    kb: KnowledgeBase, belief: Belief, mode: str = "expected", rng=None
) -> np.ndarray:
    """Post-signal belief entropy of every policy."""
    return np.array(
        [posterior_entropy(kb, belief, p, mode, rng) for p in range(kb.n_policies)], dtype=float
    )


def select_be(
    kb: KnowledgeBase,
    belief: Belief,
    kappa: Optional[float] = None,
    mode: str = "expected",
    rng=None,
) -> int:
    """
    Belief entropy: trade expected utility against the entropy left after the signal.

    Args:
        kb: Knowledge base
        belief: Current belief
        kappa: Entropy weight (default from the utility range)
        mode: "expected" or "averaged" post-signal entropy
        rng: Stream for Monte Carlo look-ahead

    Returns:
        argmax of expected utility minus kappa times post-signal entropy

    In "averaged" mode every policy scores the current belief entropy, since the
    predictive-weighted posterior is the belief itself, and the pick equals greedy.
    """
    if kappa is None:
        kappa = default_kappa(kb)
    if kappa <= 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if belief.weights.max() == 1.0:
        return select_greedy(kb, belief)
    scores = expected_utilities(kb, belief) - kappa * posterior_entropies(kb, belief, mode, rng)
    return int(np.argmax(scores))


def select_be_pure(kb: KnowledgeBase, belief: Belief, mode: str = "expected", rng=None) -> int:
    """Policy whose signal is expected to leave the least entropy."""
    if belief.weights.max() == 1.0:
        return select_greedy(kb, belief)
    return int(np.argmin(posterior_entropies(kb, belief, mode, rng)))


def select_kg(kb: KnowledgeBase, belief: Belief, t: int, horizon: int, rng=None) -> int:
    """
    Knowledge gradient: expected utility plus the value of information for the remaining episodes.

    Args:
        kb: Knowledge base
        belief: Current belief
        t: Current episode (1-based)
        horizon: Number of episodes K
        rng: Stream for Monte Carlo look-ahead

    Returns:
        argmax of expected utility + (K - t) * knowledge gradient
    """
    if not 1 <= t <= horizon:
        raise ValueError(f"Episode {t} is outside 1..{horizon}")
    utilities = expected_utilities(kb, belief)
    remaining = horizon - t
    if remaining == 0 or belief.weights.max() == 1.0:
        return int(np.argmax(utilities))
    gradients = np.array(
        [knowledge_gradient(kb, belief, p, t, horizon, rng) for p in range(kb.n_policies)]
    )
    return int(np.argmax(utilities + remaining * gradients))


def select_fixed(kb: KnowledgeBase, policy: int) -> int:
    """Always the same library policy."""
    if not 0 <= policy < kb.n_policies:
        raise ValueError(f"Policy {policy} is outside a library of {kb.n_policies}")
    return policy
