"""Strategy objects wrapping the selection rules, and the factory building them from config."""

import logging
from typing import Optional

import numpy as np

from ..core.belief import Belief
from ..core.knowledge import KnowledgeBase
from .base import EntropyMode, Strategy, StrategyConfig, StrategyKind
from .heuristics import (
    default_kappa,
    select_be,
    select_be_pure,
    select_ei,
    select_eps_greedy,
    select_fixed,
    select_greedy,
    select_kg,
    select_pi,
    select_sample_belief,
)

logger = logging.getLogger(__name__)


class GreedyStrategy(Strategy):
    """Best expected utility under the current belief."""

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_greedy(kb, belief)


class EpsGreedyStrategy(Strategy):
    """Greedy, except for a uniformly random policy with probability epsilon."""

    def __init__(self, name: str, epsilon: float):
        super().__init__(name)
        self.epsilon = epsilon

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_eps_greedy(kb, belief, self.epsilon, rng)


class SampleBeliefStrategy(Strategy):
    """Best response to a type sampled from the belief."""

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_sample_belief(kb, belief, rng)


class ImprovementProbabilityStrategy(Strategy):
    """Largest probability of beating the threshold U+."""

    def __init__(self, name: str, u_plus: Optional[float] = None, u_max: Optional[float] = None):
        super().__init__(name)
        self.u_plus = u_plus
        self.u_max = u_max

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_pi(kb, belief, self.u_plus, self.u_max)


class ExpectedImprovementStrategy(Strategy):
    """Most probability mass between the best expected utility and the cap."""

    def __init__(self, name: str, u_max: Optional[float] = None):
        super().__init__(name)
        self.u_max = u_max

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_ei(kb, belief, self.u_max)


class BeliefEntropyStrategy(Strategy):
    """Expected utility penalised by the entropy the signal is expected to leave."""

    def __init__(
        self,
        name: str,
        kappa: Optional[float] = None,
        kappa_scale: float = 1.0,
        mode: EntropyMode = EntropyMode.EXPECTED,
    ):
        super().__init__(name)
        self.kappa = kappa
        self.kappa_scale = kappa_scale
        self.mode = mode
        self._kappa: Optional[float] = kappa

    def reset(self, kb: KnowledgeBase) -> None:
        self._kappa = self.kappa if self.kappa is not None else default_kappa(kb, self.kappa_scale)

    def select(self, kb, belief, t, horizon, rng) -> int:
        if self._kappa is None:
            self.reset(kb)
        return select_be(kb, belief, self._kappa, self.mode.value, rng)


class EntropyStrategy(Strategy):
    """Pure information gathering: least expected post-signal entropy."""

    def __init__(self, name: str, mode: EntropyMode = EntropyMode.EXPECTED):
        super().__init__(name)
        self.mode = mode

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_be_pure(kb, belief, self.mode.value, rng)


class KnowledgeGradientStrategy(Strategy):
    """Expected utility plus the value of information over the remaining episodes."""

    def select(self, kb, belief, t, horizon, rng) -> int:
        return select_kg(kb, belief, t, horizon, rng)


class FixedPolicyStrategy(Strategy):
    """One library policy every episode."""

    def __init__(self, name: str, policy: int):
        super().__init__(name)
        self.policy = policy

    def select(self, kb: KnowledgeBase, belief: Belief, t, horizon, rng: np.random.Generator):
        return select_fixed(kb, self.policy)


def build_strategy(config: StrategyConfig) -> Strategy:
    """
    Create a fresh strategy instance for one run.

    Args:
        config: Strategy configuration

    Returns:
        Strategy ready to be reset on a knowledge base
    """
    from ..baselines import GpUcbStrategy, Ucb1Strategy

    name = config.name
    kind = config.kind
    mode = config.entropy_mode or EntropyMode.EXPECTED
    if kind is StrategyKind.GREEDY:
        return GreedyStrategy(name)
    if kind is StrategyKind.EPS_GREEDY:
        return EpsGreedyStrategy(name, config.epsilon)
    if kind is StrategyKind.SAMPLE_BELIEF:
        return SampleBeliefStrategy(name)
    if kind is StrategyKind.PI:
        return ImprovementProbabilityStrategy(name, config.u_plus, config.u_max)
    if kind is StrategyKind.EI:
        return ExpectedImprovementStrategy(name, config.u_max)
    if kind is StrategyKind.BE:
        return BeliefEntropyStrategy(name, config.kappa, config.kappa_scale or 1.0, mode)
    if kind is StrategyKind.ENTROPY:
        return EntropyStrategy(name, mode)
    if kind is StrategyKind.KG:
        return KnowledgeGradientStrategy(name)
    if kind is StrategyKind.FIXED:
        return FixedPolicyStrategy(name, config.policy)
    if kind is StrategyKind.UCB1:
        return Ucb1Strategy(name)
    return GpUcbStrategy(name, config.delta or 0.1, config.noise)
