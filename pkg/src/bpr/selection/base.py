"""Strategy configuration and the base class every selection strategy derives from."""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..core.belief import Belief
from ..core.knowledge import KnowledgeBase
from ..core.signals import EpisodeOutcome

logger = logging.getLogger(__name__)


class StrategyKind(str, Enum):
    """Strategy kind enumeration."""

    GREEDY = "greedy"
    EPS_GREEDY = "eps_greedy"
    SAMPLE_BELIEF = "sample_belief"
    PI = "pi"
    EI = "ei"
    BE = "be"
    KG = "kg"
    ENTROPY = "entropy"
    FIXED = "fixed"
    UCB1 = "ucb1"
    GPUCB = "gpucb"


class EntropyMode(str, Enum):
    """How the belief-entropy heuristic scores the post-signal belief."""

    EXPECTED = "expected"
    AVERAGED = "averaged"


# parameters each kind accepts; the first group lists required ones
_PARAMETERS = {
    StrategyKind.EPS_GREEDY: ({"epsilon"}, set()),
    StrategyKind.PI: (set(), {"u_plus", "u_max"}),
    StrategyKind.EI: (set(), {"u_max"}),
    StrategyKind.BE: (set(), {"kappa", "kappa_scale", "entropy_mode"}),
    StrategyKind.ENTROPY: (set(), {"entropy_mode"}),
    StrategyKind.FIXED: ({"policy"}, set()),
    StrategyKind.GPUCB: (set(), {"delta", "noise"}),
}
_OPTIONAL_FIELDS = (
    "epsilon",
    "u_plus",
    "u_max",
    "kappa",
    "kappa_scale",
    "entropy_mode",
    "policy",
    "delta",
    "noise",
)


class StrategyConfig(BaseModel):
    """Selection strategy and its parameters."""

    kind: StrategyKind = Field(..., description="Strategy kind")
    label: Optional[str] = Field(None, description="Name used in outputs (defaults to kind)")
    epsilon: Optional[float] = Field(None, ge=0.0, le=1.0, description="Exploration rate")
    u_plus: Optional[float] = Field(None, description="Improvement threshold U+ (PI)")
    u_max: Optional[float] = Field(None, description="Utility cap (PI threshold, EI integration)")
    kappa: Optional[float] = Field(None, gt=0.0, description="Entropy weight (BE)")
    kappa_scale: Optional[float] = Field(
        None, gt=0.0, description="Entropy weight as a multiple of (U_max - U_min)/log N"
    )
    entropy_mode: Optional[EntropyMode] = Field(None, description="Post-signal entropy reading")
    policy: Optional[int] = Field(None, ge=0, description="Library policy (fixed)")
    delta: Optional[float] = Field(None, gt=0.0, lt=1.0, description="GP-UCB confidence")
    noise: Optional[float] = Field(None, gt=0.0, description="GP observation noise variance")

    @model_validator(mode="after")
    def check_parameters(self) -> "StrategyConfig":
        required, optional = _PARAMETERS.get(self.kind, (set(), set()))
        given = {name for name in _OPTIONAL_FIELDS if getattr(self, name) is not None}
        missing = required - given
        if missing:
            raise ValueError(f"strategy '{self.kind.value}' needs {', '.join(sorted(missing))}")
        extra = given - required - optional
        if extra:
            raise ValueError(
                f"strategy '{self.kind.value}' does not take {', '.join(sorted(extra))}"
            )
        return self

    @property
    def name(self) -> str:
        return self.label or self.kind.value


class Strategy(ABC):
    """
    Picks the library policy to execute at each episode.

    One instance serves one run at a time; :meth:`reset` is called at the
    start of every run.
    """

    def __init__(self, name: str):
        self.name = name

    def reset(self, kb: KnowledgeBase) -> None:
        """Prepare for a new run on a knowledge base."""

    @abstractmethod
    def select(
        self, kb: KnowledgeBase, belief: Belief, t: int, horizon: int, rng: np.random.Generator
    ) -> int:
        """
        Choose a policy.

        Args:
            kb: Knowledge base
            belief: Current belief over types
            t: Episode index (1-based)
            horizon: Number of episodes K
            rng: Random stream of the run

        Returns:
            Library policy index
        """

    def observe(self, policy: int, outcome: EpisodeOutcome) -> None:
        """Record the outcome of the executed policy."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
