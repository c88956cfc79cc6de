"""Bandit and Bayesian-optimisation baselines."""

from .gpucb import (
    GpUcbState,
    GpUcbStrategy,
    gpucb_select,
    gpucb_update,
    performance_kernel,
)
from .ucb1 import Ucb1State, Ucb1Strategy, ucb1_select, ucb1_update

__all__ = [
    "GpUcbState",
    "GpUcbStrategy",
    "Ucb1State",
    "Ucb1Strategy",
    "gpucb_select",
    "gpucb_update",
    "performance_kernel",
    "ucb1_select",
    "ucb1_update",
]
