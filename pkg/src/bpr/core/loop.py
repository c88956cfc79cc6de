"""The online episode loop: select, execute, observe, update."""

import logging
from typing import Optional, Protocol, Sequence

import numpy as np

from ..cache import UtilityOracle
from ..exceptions import BPRError, ConfigError, DomainFailureError
from ..records import EpisodeRecord, RunTrace
from .belief import Belief, belief_entropy, library_regret, update_belief
from .knowledge import KnowledgeBase
from .signals import EpisodeOutcome

logger = logging.getLogger(__name__)


class Environment(Protocol):
    """Simulated domain as seen by the loop."""

    name: str

    def run_episode(self, task: float, policy: int, rng: np.random.Generator) -> EpisodeOutcome:
        """Execute one policy on one task instance."""

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        """Closed-form expected utility, or None."""


class PolicySelector(Protocol):
    """Per-run selection strategy."""

    name: str

    def reset(self, kb: KnowledgeBase) -> None:
        """Prepare for a new run."""

    def select(
        self, kb: KnowledgeBase, belief: Belief, t: int, horizon: int, rng: np.random.Generator
    ) -> int:
        """Choose the library policy for episode t."""

    def observe(self, policy: int, outcome: EpisodeOutcome) -> None:
        """Record the outcome of the executed policy."""


def run_bpr(
    kb: KnowledgeBase,
    domain: Environment,
    task: float,
    strategy: PolicySelector,
    episodes: int,
    rng: np.random.Generator,
    oracle: Optional[UtilityOracle] = None,
    task_id: int = 0,
    seed: int = 0,
    reference: Optional[Sequence[int]] = None,
) -> RunTrace:
    """
    Run K episodes of policy reuse on one unknown task.

    Args:
        kb: Trained knowledge base
        domain: Domain that executes episodes
        task: True task parameter (unknown to the strategy)
        strategy: Selection strategy, reset at the start of the run
        episodes: Horizon K
        rng: Random stream of this run
        oracle: Expected-utility cache used for regret (fresh one if omitted)
        task_id: Task index recorded in the trace
        seed: Master seed recorded in the trace
        reference: Domain policies the hindsight best is taken over (the library if omitted)

    Returns:
        Trace with one record per episode

    Raises:
        ConfigError: If K < 1
        DomainFailureError: If the domain fails during an episode
    """
    if episodes < 1:
        raise ConfigError("episodes", f"K must be at least 1, got {episodes}")
    if oracle is None:
        oracle = UtilityOracle(seed=seed)
    env_rng, select_rng = rng.spawn(2)

    true_utilities = oracle.get_many(domain, task, [p.index for p in kb.policies])
    best_policy = int(np.argmax(true_utilities))
    best_utility = float(true_utilities[best_policy])
    if reference is not None:
        best_utility = max(best_utility, float(oracle.get_many(domain, task, reference).max()))

    strategy.reset(kb)
    belief = kb.prior
    records = []
    for t in range(1, episodes + 1):
        entropy = belief_entropy(belief)
        policy = strategy.select(kb, belief, t, episodes, select_rng)
        try:
            outcome = domain.run_episode(task, kb.policies[policy].index, env_rng)
        except BPRError:
            raise
        except Exception as e:
            raise DomainFailureError(
                domain.name, str(e), {"task": task, "policy": policy, "episode": t}
            ) from e

        strategy.observe(policy, outcome)
        belief = update_belief(kb, belief, policy, outcome.signal)
        records.append(
            EpisodeRecord(
                episode=t,
                policy=policy,
                utility=outcome.utility,
                signal=outcome.signal.summary(),
                entropy=entropy,
                regret=library_regret(best_utility, float(true_utilities[policy])),
            )
        )
        logger.debug(
            f"{strategy.name} t={t}: policy {policy}, utility {outcome.utility:.4g}, "
            f"entropy {entropy:.4f}"
        )

    return RunTrace(
        task_id=task_id,
        task=task,
        seed=seed,
        strategy=strategy.name,
        best_policy=best_policy,
        episodes=records,
    )
