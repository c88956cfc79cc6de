"""Telephone personalisation: pick the language model that suits an unknown caller."""

import logging
from enum import IntEnum
from typing import List, Optional, Tuple

import numpy as np

from ..core.knowledge import PolicyInfo, TypeInfo
from ..core.signals import EpisodeOutcome, make_signal
from ..records import SignalKind
from .base import Domain

logger = logging.getLogger(__name__)

SUCCESS_REWARD = 10.0
FAILURE_REWARD = -3.0
LATE_SUCCESS_REWARD = SUCCESS_REWARD - FAILURE_REWARD


class CallState(IntEnum):
    """States of one call."""

    START = 0
    FRUSTRATED = 1
    ANNOYED = 2
    ANGRY = 3
    HANG_UP = 4
    SUCCESS = 5


ACTION = 0
TERMINAL = (CallState.HANG_UP, CallState.SUCCESS)


def success_probability(rho: float, eta: float) -> float:
    """
    Probability that a call ends in success.

    Each of the three pre-angry states resolves with probability rho(1-eta)
    and escalates with probability (1-rho)(1-eta); angry never resolves.
    """
    resolve = rho * (1.0 - eta)
    escalate = (1.0 - rho) * (1.0 - eta)
    return resolve * (1.0 + escalate + escalate**2)


class TelephoneDomain(Domain):
    """
    Spoken-dialogue interaction with a caller of unknown language model.

    Tasks and policies are language models 1..L (policy index i plays model
    i + 1). A policy that matches the caller never frustrates them; otherwise
    the caller hangs up with probability ``eta`` at every pre-angry state.

    Rewards are shaped per step. Leaving the start state pays +10 on success
    and -3 otherwise, so a hang-up and an escalation look alike. Any later
    state pays +13 on success and 0 otherwise, including the step into angry
    and the operator transfer out of it. The total is always 10 or -3.
    """

    name = "telephone"
    supported_kinds = (SignalKind.TRANSITION, SignalKind.REWARD, SignalKind.RETURN)
    performance_family = "categorical"
    utility_values = (FAILURE_REWARD, SUCCESS_REWARD)

    def __init__(
        self,
        signal_kind: SignalKind = SignalKind.TRANSITION,
        utility_range: Tuple[float, float] = (FAILURE_REWARD, SUCCESS_REWARD),
        n_models: int = 20,
        hang_up: float = 0.3,
    ):
        """
        Initialize telephone domain.

        Args:
            signal_kind: "sas", "sar" or "u"
            utility_range: (U_min, U_max)
            n_models: Number of language models L
            hang_up: Hang-up probability eta for mismatched models
        """
        super().__init__(signal_kind, utility_range)
        self.n_models = int(n_models)
        self.hang_up = float(hang_up)
        self._policies = tuple(PolicyInfo(i, f"lm-{i + 1}") for i in range(self.n_models))

    @property
    def policies(self) -> Tuple[PolicyInfo, ...]:
        return self._policies

    def training_types(self) -> List[TypeInfo]:
        return [TypeInfo(f"lambda-{m}", float(m)) for m in range(1, self.n_models + 1)]

    def sample_task(self, rng: np.random.Generator) -> float:
        return float(rng.integers(1, self.n_models + 1))

    def match(self, task: float, policy: int) -> Tuple[float, float]:
        """(rho, eta) of a caller model and a library policy."""
        distance = abs((policy + 1) - task)
        rho = 1.0 - distance / self.n_models
        eta = 0.0 if distance == 0 else self.hang_up
        return rho, eta

    def trace_outcomes(self, kind: SignalKind) -> Tuple[float, ...]:
        if kind is SignalKind.TRANSITION:
            return tuple(int(s) for s in CallState)
        if kind is SignalKind.REWARD:
            return (FAILURE_REWARD, 0.0, SUCCESS_REWARD, LATE_SUCCESS_REWARD)
        return super().trace_outcomes(kind)

    def _step(self, state: CallState, rho: float, eta: float, rng) -> Tuple[CallState, float]:
        if state is CallState.ANGRY:
            return CallState.HANG_UP, 0.0
        first = state is CallState.START
        u = rng.random()
        if u < rho * (1.0 - eta):
            return CallState.SUCCESS, SUCCESS_REWARD if first else LATE_SUCCESS_REWARD
        miss = FAILURE_REWARD if first else 0.0
        if u < rho * (1.0 - eta) + eta:
            return CallState.HANG_UP, miss
        return CallState(state + 1), miss

    def run_episode(self, task: float, policy: int, rng: np.random.Generator) -> EpisodeOutcome:
        rho, eta = self.match(task, policy)
        state = CallState.START
        transitions, rewards = [], []
        total = 0.0
        while state not in TERMINAL:
            nxt, reward = self._step(state, rho, eta, rng)
            transitions.append((int(state), ACTION, int(nxt)))
            rewards.append((int(state), ACTION, reward))
            total += reward
            state = nxt

        if self.signal_kind is SignalKind.TRANSITION:
            signal = make_signal(SignalKind.TRANSITION, transitions)
        elif self.signal_kind is SignalKind.REWARD:
            signal = make_signal(SignalKind.REWARD, rewards)
        else:
            signal = make_signal(SignalKind.RETURN, total)
        return EpisodeOutcome(signal, total)

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        p = success_probability(*self.match(task, policy))
        return SUCCESS_REWARD * p + FAILURE_REWARD * (1.0 - p)
