"""Interfaces of the performance and observation models a knowledge base holds."""

import math
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Optional, Tuple

import numpy as np

from .signals import Signal


class ObservationModel(ABC):
    """Distribution over the signals one policy emits on one type."""

    family: ClassVar[str]

    @abstractmethod
    def log_likelihood(self, signal: Signal) -> float:
        """Log-probability (or log-density) of a signal; -inf outside the support."""

    def likelihood(self, signal: Signal) -> float:
        """Probability (or density) of a signal."""
        return math.exp(self.log_likelihood(signal))

    @abstractmethod
    def sample_signal(self, rng: np.random.Generator) -> Signal:
        """Draw one signal."""

    def support(self) -> Optional[Tuple[Signal, ...]]:
        """Finite signal space, or None for continuous models."""
        return None

    def gaussian_params(self) -> Optional[Tuple[float, float]]:
        """(mean, sd) when the model is a single Gaussian over a real signal."""
        return None

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Serializable form (everything needed to rebuild the model)."""

    def parameters(self) -> Dict[str, Any]:
        """Model parameters that count towards storage complexity."""
        return self.to_dict()


class PerformanceModel(ABC):
    """Distribution over the utility of one policy on one type."""

    family: ClassVar[str]

    @property
    @abstractmethod
    def mean(self) -> float:
        """Expected utility E[U | type, policy]."""

    @property
    @abstractmethod
    def variance(self) -> float:
        """Var[U | type, policy]."""

    @abstractmethod
    def pdf(self, u: float) -> float:
        """Density of U at u (probability mass for discrete models)."""

    @abstractmethod
    def cdf(self, u: float) -> float:
        """F(u) = P(U <= u)."""

    @abstractmethod
    def sample_utility(self, rng: np.random.Generator) -> float:
        """Draw one utility."""

    def gaussian_params(self) -> Optional[Tuple[float, float]]:
        """(mean, sd) when the model is a single Gaussian."""
        return None

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Serializable form."""

    def parameters(self) -> Dict[str, Any]:
        """Model parameters that count towards storage complexity."""
        return self.to_dict()
