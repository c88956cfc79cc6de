"""Golf club selection: pick the club whose range best matches an unknown hole."""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from ..core.knowledge import PolicyInfo, TypeInfo
from ..core.signals import CategoryBin, EpisodeOutcome, EpisodicReturn
from ..records import SignalKind
from .base import Domain, EpisodeBatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Club:
    """A club and its carry distance in yards."""

    name: str
    mean_yardage: float
    sd_yardage: float


CLUBS: Tuple[Club, ...] = (
    Club("3-wood", 215.0, 8.0),
    Club("3-iron", 180.0, 7.2),
    Club("6-iron", 150.0, 6.0),
    Club("9-iron", 115.0, 4.4),
)
TRAINING_HOLES: Tuple[float, ...] = (110.0, 150.0, 170.0, 220.0)
# signed error (landing - hole) in yards; outer bins unbounded
BIN_EDGES: Tuple[float, ...] = (-50.0, -20.0, -5.0, 5.0, 20.0, 50.0)
BIN_LABELS: Tuple[str, ...] = ("<-50", "-50--20", "-20--5", "-5-5", "5-20", "20-50", ">50")


def error_bin(error: float) -> int:
    """Category bin of a signed landing error."""
    return int(np.digitize(error, BIN_EDGES))


def folded_normal_mean(mu: float, sd: float) -> float:
    """E|X| for X ~ N(mu, sd^2)."""
    if sd == 0:
        return abs(mu)
    return sd * math.sqrt(2.0 / math.pi) * math.exp(-(mu**2) / (2.0 * sd**2)) + mu * (
        1.0 - 2.0 * norm.cdf(-mu / sd)
    )


class GolfDomain(Domain):
    """
    One shot per episode; the utility is minus the distance to the hole.

    The task is the hole distance in yards. The signal is either the bin of
    the signed landing error or the episodic return itself.
    """

    name = "golf"
    supported_kinds = (SignalKind.CATEGORY, SignalKind.RETURN)
    performance_family = "gaussian"
    bin_edges = BIN_EDGES

    def __init__(
        self,
        signal_kind: SignalKind = SignalKind.CATEGORY,
        utility_range: Tuple[float, float] = (-150.0, 0.0),
        holes: Sequence[float] = TRAINING_HOLES,
        task_range: Tuple[float, float] = (120.0, 220.0),
        clubs: Sequence[Club] = CLUBS,
        noise_scale: float = 1.0,
    ):
        """
        Initialize golf domain.

        Args:
            signal_kind: "category" (error bins) or "u" (episodic return)
            utility_range: (U_min, U_max)
            holes: Hole distances of the known types
            task_range: Range online holes are drawn from
            clubs: Club library
            noise_scale: Multiplier of every club's spread (0 gives exact shots)
        """
        super().__init__(signal_kind, utility_range)
        self.holes = tuple(float(h) for h in holes)
        self.task_range = (float(task_range[0]), float(task_range[1]))
        self.clubs = tuple(clubs)
        self.noise_scale = float(noise_scale)
        self._policies = tuple(PolicyInfo(i, c.name) for i, c in enumerate(self.clubs))

    @property
    def policies(self) -> Tuple[PolicyInfo, ...]:
        return self._policies

    def training_types(self) -> List[TypeInfo]:
        return [TypeInfo(f"hole-{h:g}", h) for h in self.holes]

    def sample_task(self, rng: np.random.Generator) -> float:
        return float(rng.uniform(*self.task_range))

    def _spread(self, club: Club) -> float:
        return club.sd_yardage * self.noise_scale

    def run_episode(self, task: float, policy: int, rng: np.random.Generator) -> EpisodeOutcome:
        club = self.clubs[policy]
        error = float(rng.normal(club.mean_yardage, self._spread(club))) - task
        utility = -abs(error)
        if self.signal_kind is SignalKind.RETURN:
            return EpisodeOutcome(EpisodicReturn(utility), utility)
        return EpisodeOutcome(CategoryBin(error_bin(error)), utility)

    def simulate(
        self, task: float, policy: int, n: int, rng: np.random.Generator
    ) -> EpisodeBatch:
        club = self.clubs[policy]
        errors = rng.normal(club.mean_yardage, self._spread(club), size=n) - task
        utilities = -np.abs(errors)
        if self.signal_kind is SignalKind.RETURN:
            return EpisodeBatch(utilities, utilities)
        return EpisodeBatch(utilities, np.digitize(errors, BIN_EDGES))

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        club = self.clubs[policy]
        return -folded_normal_mean(club.mean_yardage - task, self._spread(club))
