"""Policy selection mechanisms."""

from .base import EntropyMode, Strategy, StrategyConfig, StrategyKind
from .heuristics import (
    best_expected_utility,
    default_kappa,
    default_u_plus,
    improvement_probabilities,
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
from .lookahead import (
    SignalOutcomes,
    expected_posterior,
    knowledge_gradient,
    posterior_entropy,
    signal_outcomes,
)
from .strategies import build_strategy

__all__ = [
    "EntropyMode",
    "SignalOutcomes",
    "Strategy",
    "StrategyConfig",
    "StrategyKind",
    "best_expected_utility",
    "build_strategy",
    "default_kappa",
    "default_u_plus",
    "expected_posterior",
    "improvement_probabilities",
    "knowledge_gradient",
    "posterior_entropy",
    "select_be",
    "select_be_pure",
    "select_ei",
    "select_eps_greedy",
    "select_fixed",
    "select_greedy",
    "select_kg",
    "select_pi",
    "select_sample_belief",
    "signal_outcomes",
]
