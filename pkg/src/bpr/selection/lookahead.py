"""One-step look-ahead over the signal a policy would emit under the current belief."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from scipy.special import logsumexp, roots_hermite
from scipy.stats import entropy as _entropy

from ..core.belief import Belief, expected_utilities
from ..core.knowledge import KnowledgeBase
from ..utils import derive_rng

logger = logging.getLogger(__name__)

HERMITE_NODES = 32
MONTE_CARLO_SAMPLES = 10_000
ACTIVE_MASS = 1e-12


@dataclass(frozen=True)
class SignalOutcomes:
    """
    Finite stand-in for the predictive signal distribution of one policy.

    Row m of ``posteriors`` is the belief after observing signal point m,
    which has predictive probability ``weights[m]``.
    """

    weights: np.ndarray
    posteriors: np.ndarray

    def expected_posterior(self) -> np.ndarray:
        return self.weights @ self.posteriors

    def expected_entropy(self) -> float:
        """Average entropy of the per-signal posteriors."""
        return float(self.weights @ _entropy(self.posteriors, axis=1))


def _discrete_likelihoods(kb: KnowledgeBase, policy: int) -> Optional[np.ndarray]:
    """Likelihood matrix (signals x types) normalized over the enumerated support."""
    supports = [row[policy].support() for row in kb.obs]
    if any(s is None for s in supports):
        return None
    seen: Dict[object, None] = {}
    for support in supports:
        for signal in support:
            seen.setdefault(signal, None)
    signals = list(seen)
    if not signals:
        return None
    lik = np.array([kb.likelihoods(policy, s) for s in signals], dtype=float)
    totals = lik.sum(axis=0)
    totals[totals == 0] = 1.0
    return lik / totals


def _from_joint(joint: np.ndarray) -> SignalOutcomes:
    q = joint.sum(axis=1)
    keep = q > 0
    q, joint = q[keep], joint[keep]
    return SignalOutcomes(weights=q / q.sum(), posteriors=joint / q[:, None])


def _gauss_hermite(kb: KnowledgeBase, belief: Belief, policy: int) -> SignalOutcomes:
    mu, sd = kb.obs_gaussian
    mu, sd = mu[:, policy], sd[:, policy]
    nodes, node_weights = roots_hermite(HERMITE_NODES)
    active = np.flatnonzero(belief.weights > ACTIVE_MASS)

    points = (mu[active, None] + np.sqrt(2.0) * sd[active, None] * nodes[None, :]).ravel()
    q = (belief.weights[active, None] * node_weights[None, :] / np.sqrt(np.pi)).ravel()

    with np.errstate(divide="ignore"):
        log_prior = np.log(belief.weights)
    log_lik = (
        -0.5 * ((points[:, None] - mu[None, :]) / sd[None, :]) ** 2
        - np.log(sd)[None, :]
    )
    log_joint = log_lik + log_prior[None, :]
    posteriors = np.exp(log_joint - logsumexp(log_joint, axis=1, keepdims=True))
    return SignalOutcomes(weights=q / q.sum(), posteriors=posteriors)


def _monte_carlo(
    kb: KnowledgeBase, belief: Belief, policy: int, rng: np.random.Generator
) -> SignalOutcomes:
    types = rng.choice(kb.n_types, size=MONTE_CARLO_SAMPLES, p=belief.weights)
    with np.errstate(divide="ignore"):
        log_prior = np.log(belief.weights)
    rows: List[np.ndarray] = []
    for t in types:
        signal = kb.obs[t][policy].sample_signal(rng)
        log_joint = kb.log_likelihoods(policy, signal) + log_prior
        rows.append(np.exp(log_joint - logsumexp(log_joint)))
    weights = np.full(MONTE_CARLO_SAMPLES, 1.0 / MONTE_CARLO_SAMPLES)
    return SignalOutcomes(weights=weights, posteriors=np.vstack(rows))


def signal_outcomes(
    kb: KnowledgeBase,
    belief: Belief,
    policy: int,
    rng: Optional[np.random.Generator] = None,
) -> SignalOutcomes:
    """
    Enumerate (or integrate over) the signals a policy may emit.

    Discrete signal spaces are enumerated exactly. Gaussian observation
    models use Gauss-Hermite quadrature per type component. Anything else
    falls back to Monte Carlo sampling.

    Args:
        kb: Knowledge base
        belief: Current belief
        policy: Library policy index
        rng: Stream for the Monte Carlo fallback (a fixed stream if omitted)

    Returns:
        Signal points with their predictive weights and posteriors
    """
    lik = kb.memo(("signal-likelihoods", policy), lambda: _discrete_likelihoods(kb, policy))
    if lik is not None:
        return _from_joint(lik * belief.weights[None, :])
    if kb.obs_gaussian is not None:
        return _gauss_hermite(kb, belief, policy)
    logger.debug(f"Monte Carlo look-ahead for policy {policy}")
    return _monte_carlo(kb, belief, policy, rng or derive_rng(0, "lookahead", policy))


def expected_posterior(
    kb: KnowledgeBase, belief: Belief, policy: int, rng: Optional[np.random.Generator] = None
) -> Belief:
    """
    Belief expected after observing the signal of one policy.

    Args:
        kb: Knowledge base
        belief: Current belief
        policy: Library policy index
        rng: Stream for the Monte Carlo fallback

    Returns:
        Predictive-weighted average of the per-signal posteriors
    """
    return Belief.from_weights(signal_outcomes(kb, belief, policy, rng).expected_posterior())


def posterior_entropy(
    kb: KnowledgeBase,
    belief: Belief,
    policy: int,
    mode: str = "expected",
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Entropy of the belief after running a policy.

    Args:
        kb: Knowledge base
        belief: Current belief
        policy: Library policy index
        mode: "expected" averages the entropy of each per-signal posterior;
            "averaged" takes the entropy of the expected posterior, which equals
            the current belief, so it is the same for every policy
        rng: Stream for the Monte Carlo fallback

    Returns:
        Entropy in nats
    """
    outcomes = signal_outcomes(kb, belief, policy, rng)
    if mode == "averaged":
        return float(_entropy(outcomes.expected_posterior()))
    return outcomes.expected_entropy()


def knowledge_gradient(
    kb: KnowledgeBase,
    belief: Belief,
    policy: int,
    t: int = 1,
    horizon: int = 1,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Expected gain in the best expected utility from observing one policy's signal.

    Args:
        kb: Knowledge base
        belief: Current belief
        policy: Library policy index
        t: Current episode (1-based)
        horizon: Number of episodes K
        rng: Stream for the Monte Carlo fallback

    Returns:
        Non-negative knowledge gradient
    """
    if not 1 <= t <= horizon:
        raise ValueError(f"Episode {t} is outside 1..{horizon}")
    outcomes = signal_outcomes(kb, belief, policy, rng)
    best_after = (outcomes.posteriors @ kb.means).max(axis=1)
    gain = float(outcomes.weights @ best_after) - float(expected_utilities(kb, belief).max())
    return max(gain, 0.0)
