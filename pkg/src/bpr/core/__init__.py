"""Domain-independent policy-reuse primitives."""

from .belief import (
    Belief,
    average_library_regret,
    bayes_update,
    bayes_update_log,
    belief_entropy,
    epsilon_equivalent,
    expected_utilities,
    expected_utility,
    library_regret,
    update_belief,
)
from .distributions import ObservationModel, PerformanceModel
from .knowledge import KnowledgeBase, PolicyInfo, TypeInfo
from .loop import Environment, PolicySelector, run_bpr
from .signals import (
    CategoryBin,
    EpisodeOutcome,
    EpisodicReturn,
    RewardTrace,
    ScalarReal,
    Signal,
    TransitionTrace,
    make_signal,
)

__all__ = [
    "Belief",
    "CategoryBin",
    "Environment",
    "EpisodeOutcome",
    "EpisodicReturn",
    "KnowledgeBase",
    "ObservationModel",
    "PerformanceModel",
    "PolicyInfo",
    "PolicySelector",
    "RewardTrace",
    "ScalarReal",
    "Signal",
    "TransitionTrace",
    "TypeInfo",
    "average_library_regret",
    "bayes_update",
    "bayes_update_log",
    "belief_entropy",
    "epsilon_equivalent",
    "expected_utilities",
    "expected_utility",
    "library_regret",
    "make_signal",
    "run_bpr",
    "update_belief",
]
