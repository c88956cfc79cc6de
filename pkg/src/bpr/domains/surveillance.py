"""Surveillance: choose which location a drone surveys to find a poacher."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core.knowledge import PolicyInfo, TypeInfo
from ..core.signals import EpisodeOutcome, make_signal
from ..records import SignalKind
from ..utils import derive_rng
from .base import Domain, EpisodeBatch

logger = logging.getLogger(__name__)

GRID_SIZE = 26
HILLTOPS: Tuple[Tuple[int, int], ...] = ((6, 6), (6, 19), (19, 6), (19, 19))
RING_CELLS = 16
RING_RADII = (3, 5)
BASE = (0, 0)
DEFAULT_MAP_SEED = 0

NOISE_MEAN = 10.0
NOISE_SD = 20.0
HILL_RANGE = 15
GROUND_RANGE = 3

Cell = Tuple[int, int]


@dataclass(frozen=True)
class SurveillanceMap:
    """Survey locations of the grid; hilltops see further."""

    cells: Tuple[Cell, ...]
    hilltop: Tuple[bool, ...]
    base: Cell = BASE
    size: int = GRID_SIZE

    def __len__(self) -> int:
        return len(self.cells)

    def distance(self, i: int, j: int) -> int:
        """Chebyshev distance between two locations."""
        (xi, yi), (xj, yj) = self.cells[i], self.cells[j]
        return max(abs(xi - xj), abs(yi - yj))


def generate_surveillance_map(seed: int = DEFAULT_MAP_SEED) -> SurveillanceMap:
    """
    Lay out four hilltops and 16 ground locations around each.

    Ground locations are drawn without replacement from the ring of cells at
    Chebyshev radius 3 to 5 around their hilltop. Each hilltop is followed
    by its own ground locations in the resulting order.

    Args:
        seed: Layout seed

    Returns:
        Map with 68 distinct locations
    """
    rng = derive_rng(seed, "surveillance-map")
    cells: List[Cell] = []
    hilltop: List[bool] = []
    low, high = RING_RADII
    for hx, hy in HILLTOPS:
        ring = [
            (x, y)
            for x in range(hx - high, hx + high + 1)
            for y in range(hy - high, hy + high + 1)
            if low <= max(abs(x - hx), abs(y - hy)) <= high
            and 0 <= x < GRID_SIZE
            and 0 <= y < GRID_SIZE
        ]
        chosen = sorted(rng.choice(len(ring), size=RING_CELLS, replace=False))
        cells.append((hx, hy))
        hilltop.append(True)
        cells.extend(ring[i] for i in chosen)
        hilltop.extend([False] * RING_CELLS)
    return SurveillanceMap(tuple(cells), tuple(hilltop))


class SurveillanceDomain(Domain):
    """
    A poacher hides at one of the survey locations; surveying returns a reward.

    The task is the poacher's location index and policy i surveys location
    i. The reward is ``200 - 30d + noise`` when a hilltop within 15 cells is
    surveyed, ``200 - 20d + noise`` for a ground location within 3 cells, and
    pure noise otherwise. The reward is both the signal and the utility.
    """

    name = "surveillance"
    supported_kinds = (SignalKind.SCALAR, SignalKind.RETURN)
    performance_family = "gaussian"

    def __init__(
        self,
        signal_kind: SignalKind = SignalKind.SCALAR,
        utility_range: Tuple[float, float] = (-250.0, 250.0),
        map_seed: int = DEFAULT_MAP_SEED,
        noise_sd: float = NOISE_SD,
    ):
        """
        Initialize surveillance domain.

        Args:
            signal_kind: "scalar" or "u" (the same reward either way)
            utility_range: (U_min, U_max)
            map_seed: Layout seed
            noise_sd: Standard deviation of the reward noise
        """
        super().__init__(signal_kind, utility_range)
        self.map = generate_surveillance_map(map_seed)
        self.noise_sd = float(noise_sd)
        n = len(self.map)
        self._means = np.array(
            [[self._signal_mean(int(tau), p) for p in range(n)] for tau in range(n)], dtype=float
        )
        self._policies = tuple(
            PolicyInfo(i, f"{'hill' if h else 'site'}-{x}-{y}")
            for i, ((x, y), h) in enumerate(zip(self.map.cells, self.map.hilltop))
        )

    def _signal_mean(self, task: int, policy: int) -> float:
        d = self.map.distance(policy, task)
        if self.map.hilltop[policy] and d <= HILL_RANGE:
            base = 200.0 - 30.0 * d
        elif not self.map.hilltop[policy] and d <= GROUND_RANGE:
            base = 200.0 - 20.0 * d
        else:
            base = 0.0
        return base + NOISE_MEAN

    @property
    def policies(self) -> Tuple[PolicyInfo, ...]:
        return self._policies

    def training_types(self) -> List[TypeInfo]:
        return [TypeInfo(p.name, float(p.index)) for p in self._policies]

    def sample_task(self, rng: np.random.Generator) -> float:
        return float(rng.integers(0, len(self.map)))

    def run_episode(self, task: float, policy: int, rng: np.random.Generator) -> EpisodeOutcome:
        reward = self._means[int(task), policy] - NOISE_MEAN + rng.normal(NOISE_MEAN, self.noise_sd)
        return EpisodeOutcome(make_signal(self.signal_kind, reward), float(reward))

    def simulate(
        self, task: float, policy: int, n: int, rng: np.random.Generator
    ) -> EpisodeBatch:
        base = self._means[int(task), policy] - NOISE_MEAN
        rewards = base + rng.normal(NOISE_MEAN, self.noise_sd, size=n)
        return EpisodeBatch(rewards, rewards)

    def expected_utility(self, task: float, policy: int) -> Optional[float]:
        return float(self._means[int(task), policy])
