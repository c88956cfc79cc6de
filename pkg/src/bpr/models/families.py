"""Concrete model families fitted offline for every (type, policy) pair."""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, ClassVar, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from ..core.distributions import ObservationModel, PerformanceModel
from ..core.signals import (
    CategoryBin,
    EpisodicReturn,
    RewardTrace,
    ScalarReal,
    Signal,
    TransitionTrace,
    make_signal,
)
from ..exceptions import EmptySequenceError, FamilyMismatchError
from ..records import SignalKind

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.01
DEFAULT_SD_FLOOR = 1e-3


def _mismatch(model: ObservationModel, signal: Signal) -> FamilyMismatchError:
    return FamilyMismatchError(model.family, type(signal).__name__)


@dataclass(frozen=True, eq=False)
class HistogramModel(ObservationModel):
    """Laplace-smoothed histogram over category bins."""

    counts: Tuple[int, ...]
    alpha: float = DEFAULT_ALPHA
    bin_edges: Tuple[float, ...] = ()

    family: ClassVar[str] = "histogram"

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"Histogram smoothing alpha must be positive, got {self.alpha}")
        if not self.counts or min(self.counts) < 0:
            raise ValueError("Histogram counts must be a non-empty vector of non-negative ints")
        if self.bin_edges and len(self.bin_edges) + 1 != len(self.counts):
            raise ValueError(
                f"{len(self.bin_edges)} bin edges do not define {len(self.counts)} bins"
            )

    @classmethod
    def fit(
        cls,
        bins: Iterable[int],
        n_bins: int,
        alpha: float = DEFAULT_ALPHA,
        bin_edges: Sequence[float] = (),
    ) -> "HistogramModel":
        """Count bin occurrences."""
        counts = np.bincount(np.asarray(list(bins), dtype=int), minlength=n_bins)
        return cls(tuple(int(c) for c in counts), alpha, tuple(float(e) for e in bin_edges))

    @property
    def n_bins(self) -> int:
        return len(self.counts)

    @cached_property
    def probabilities(self) -> np.ndarray:
        counts = np.asarray(self.counts, dtype=float)
        return (counts + self.alpha) / (counts.sum() + self.alpha * self.n_bins)

    def log_likelihood(self, signal: Signal) -> float:
        if not isinstance(signal, CategoryBin):
            raise _mismatch(self, signal)
        if not 0 <= signal.bin < self.n_bins:
            return -math.inf
        return float(np.log(self.probabilities[signal.bin]))

    def sample_signal(self, rng: np.random.Generator) -> Signal:
        return CategoryBin(int(rng.choice(self.n_bins, p=self.probabilities)))

    def support(self) -> Tuple[Signal, ...]:
        return tuple(CategoryBin(b) for b in range(self.n_bins))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "counts": list(self.counts),
            "alpha": self.alpha,
            "bin_edges": list(self.bin_edges),
        }

    def parameters(self) -> Dict[str, Any]:
        return {"counts": list(self.counts), "alpha": self.alpha}


@dataclass(frozen=True, eq=False)
class GaussianModel(ObservationModel, PerformanceModel):
    """Normal distribution over a real signal or utility."""

    mu: float
    sd: float
    sd_floor: float = DEFAULT_SD_FLOOR
    emits: SignalKind = SignalKind.SCALAR

    family: ClassVar[str] = "gaussian"

    def __post_init__(self):
        if self.sd_floor <= 0 or self.sd < self.sd_floor:
            raise ValueError(f"Gaussian sd {self.sd} is below the floor {self.sd_floor}")
        if self.emits not in (SignalKind.SCALAR, SignalKind.RETURN):
            raise ValueError(f"Gaussian model cannot emit '{self.emits.value}' signals")

    @classmethod
    def fit(
        cls,
        values: Sequence[float],
        sd_floor: float = DEFAULT_SD_FLOOR,
        emits: SignalKind = SignalKind.SCALAR,
    ) -> "GaussianModel":
        """
        Fit mean and Bessel-corrected standard deviation.

        Sums are exactly rounded, so the fit does not depend on sample order.

        Raises:
            EmptySequenceError: If no values are given
        """
        xs = [float(v) for v in values]
        n = len(xs)
        if n == 0:
            raise EmptySequenceError("Cannot fit a Gaussian to zero samples")
        mu = math.fsum(xs) / n
        sd = math.sqrt(math.fsum((x - mu) ** 2 for x in xs) / (n - 1)) if n > 1 else 0.0
        return cls(mu, max(sd, sd_floor), sd_floor, emits)

    @property
    def mean(self) -> float:
        return self.mu

    @property
    def variance(self) -> float:
        return self.sd**2

    def gaussian_params(self) -> Optional[Tuple[float, float]]:
        return (self.mu, self.sd)

    def log_likelihood(self, signal: Signal) -> float:
        if not isinstance(signal, (ScalarReal, EpisodicReturn)):
            raise _mismatch(self, signal)
        return float(norm.logpdf(signal.value, loc=self.mu, scale=self.sd))

    def pdf(self, u: float) -> float:
        return float(norm.pdf(u, loc=self.mu, scale=self.sd))

    def cdf(self, u: float) -> float:
        return float(norm.cdf(u, loc=self.mu, scale=self.sd))

    def sample_utility(self, rng: np.random.Generator) -> float:
        return float(rng.normal(self.mu, self.sd))

    def sample_signal(self, rng: np.random.Generator) -> Signal:
        return make_signal(self.emits, self.sample_utility(rng))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "mu": self.mu,
            "sd": self.sd,
            "sd_floor": self.sd_floor,
            "emits": self.emits.value,
        }

    def parameters(self) -> Dict[str, Any]:
        return {"mu": self.mu, "sd": self.sd}


@dataclass(frozen=True, eq=False)
class CategoricalModel(ObservationModel, PerformanceModel):
    """
    Smoothed categorical over a declared finite set of utility values.

    Serves both as a performance model and, for episodic-return signals, as
    the observation model. With ``alpha=0`` and a single observed value it is
    a point mass.
    """

    values: Tuple[float, ...]
    counts: Tuple[int, ...]
    alpha: float = DEFAULT_ALPHA

    family: ClassVar[str] = "categorical"

    def __post_init__(self):
        if len(self.values) != len(self.counts) or not self.values:
            raise ValueError("Categorical values and counts must be non-empty and aligned")
        if self.alpha < 0 or min(self.counts) < 0:
            raise ValueError("Categorical counts and alpha must be non-negative")
        if self.alpha == 0 and sum(self.counts) == 0:
            raise EmptySequenceError("Unsmoothed categorical needs at least one count")

    @classmethod
    def fit(
        cls, samples: Iterable[float], values: Sequence[float], alpha: float = DEFAULT_ALPHA
    ) -> "CategoricalModel":
        """
        Count occurrences of each declared value.

        Raises:
            ValueError: If a sample is not one of the declared values
        """
        index = {float(v): i for i, v in enumerate(values)}
        counts = [0] * len(values)
        for s in samples:
            i = index.get(float(s))
            if i is None:
                raise ValueError(f"Sample {s} is not among the declared values {list(values)}")
            counts[i] += 1
        return cls(tuple(float(v) for v in values), tuple(counts), alpha)

    @cached_property
    def probabilities(self) -> np.ndarray:
        counts = np.asarray(self.counts, dtype=float)
        return (counts + self.alpha) / (counts.sum() + self.alpha * len(counts))

    @cached_property
    def _index(self) -> Dict[float, int]:
        return {v: i for i, v in enumerate(self.values)}

    @property
    def mean(self) -> float:
        return float(self.probabilities @ np.asarray(self.values))

    @property
    def variance(self) -> float:
        values = np.asarray(self.values)
        return float(self.probabilities @ (values - self.mean) ** 2)

    def pdf(self, u: float) -> float:
        i = self._index.get(float(u))
        return 0.0 if i is None else float(self.probabilities[i])

    def cdf(self, u: float) -> float:
        mask = np.asarray(self.values) <= u
        return float(min(1.0, self.probabilities[mask].sum()))

    def sample_utility(self, rng: np.random.Generator) -> float:
        return self.values[int(rng.choice(len(self.values), p=self.probabilities))]

    def log_likelihood(self, signal: Signal) -> float:
        if not isinstance(signal, (EpisodicReturn, ScalarReal)):
            raise _mismatch(self, signal)
        i = self._index.get(float(signal.value))
        if i is None or self.probabilities[i] == 0:
            return -math.inf
        return float(np.log(self.probabilities[i]))

    def sample_signal(self, rng: np.random.Generator) -> Signal:
        return EpisodicReturn(self.sample_utility(rng))

    def support(self) -> Tuple[Signal, ...]:
        return tuple(EpisodicReturn(v) for v in self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "values": list(self.values),
            "counts": list(self.counts),
            "alpha": self.alpha,
        }

    def parameters(self) -> Dict[str, Any]:
        return {"values": list(self.values), "counts": list(self.counts), "alpha": self.alpha}


TraceStep = Tuple[int, int, Any]


@dataclass(frozen=True, eq=False)
class TraceModel(ObservationModel):
    """
    Per (state, action) categorical over next states or rewards.

    The likelihood of a trace is the product of its step conditionals.
    Unvisited (state, action) pairs are uniform over the outcomes. The
    catalogue lists every distinct trace seen in training and is the signal
    space used for look-ahead enumeration.
    """

    kind: SignalKind
    outcomes: Tuple[Any, ...]
    table: Tuple[Tuple[int, int, Tuple[int, ...]], ...]
    alpha: float = DEFAULT_ALPHA
    catalogue: Tuple[Tuple[TraceStep, ...], ...] = ()

    family: ClassVar[str] = "trace"

    def __post_init__(self):
        if self.kind not in (SignalKind.TRANSITION, SignalKind.REWARD):
            raise ValueError(f"Trace model cannot score '{self.kind.value}' signals")
        if self.alpha <= 0:
            raise ValueError(f"Trace smoothing alpha must be positive, got {self.alpha}")
        for s, a, counts in self.table:
            if len(counts) != len(self.outcomes):
                raise ValueError(f"Row ({s}, {a}) has {len(counts)} counts")

    @classmethod
    def fit(
        cls,
        kind: SignalKind,
        traces: Iterable[Sequence[TraceStep]],
        outcomes: Sequence[Any],
        alpha: float = DEFAULT_ALPHA,
    ) -> "TraceModel":
        """
        Count step outcomes per (state, action) over a set of traces.

        Raises:
            ValueError: If a step outcome is not among the declared outcomes
        """
        index = {o: i for i, o in enumerate(outcomes)}
        rows: Dict[Tuple[int, int], np.ndarray] = {}
        seen = set()
        for trace in traces:
            steps = tuple(trace)
            seen.add(steps)
            for s, a, o in steps:
                i = index.get(o)
                if i is None:
                    raise ValueError(f"Step outcome {o} is not among {list(outcomes)}")
                row = rows.setdefault((s, a), np.zeros(len(outcomes), dtype=int))
                row[i] += 1
        table = tuple(
            (s, a, tuple(int(c) for c in rows[(s, a)])) for s, a in sorted(rows)
        )
        return cls(kind, tuple(outcomes), table, alpha, tuple(sorted(seen)))

    @cached_property
    def _log_rows(self) -> Dict[Tuple[int, int], np.ndarray]:
        b = len(self.outcomes)
        rows = {}
        for s, a, counts in self.table:
            c = np.asarray(counts, dtype=float)
            rows[(s, a)] = np.log((c + self.alpha) / (c.sum() + self.alpha * b))
        return rows

    @cached_property
    def _outcome_index(self) -> Dict[Any, int]:
        return {o: i for i, o in enumerate(self.outcomes)}

    def conditional(self, state: int, action: int) -> np.ndarray:
        """Outcome distribution of one (state, action) pair."""
        row = self._log_rows.get((state, action))
        if row is None:
            return np.full(len(self.outcomes), 1.0 / len(self.outcomes))
        return np.exp(row)

    def _signal_class(self):
        return TransitionTrace if self.kind is SignalKind.TRANSITION else RewardTrace

    def log_likelihood(self, signal: Signal) -> float:
        if not isinstance(signal, self._signal_class()):
            raise _mismatch(self, signal)
        uniform = -math.log(len(self.outcomes))
        total = 0.0
        for s, a, o in signal.steps:
            i = self._outcome_index.get(o)
            if i is None:
                return -math.inf
            row = self._log_rows.get((s, a))
            total += uniform if row is None else float(row[i])
        return total

    def support(self) -> Tuple[Signal, ...]:
        cls = self._signal_class()
        return tuple(cls(steps) for steps in self.catalogue)

    def sample_signal(self, rng: np.random.Generator) -> Signal:
        """
        Draw a catalogued trace with probability proportional to its likelihood.

        Raises:
            EmptySequenceError: If the catalogue is empty
        """
        signals = self.support()
        if not signals:
            raise EmptySequenceError("Trace model has no catalogued traces to sample")
        logp = np.array([self.log_likelihood(s) for s in signals])
        p = np.exp(logp - logp.max())
        return signals[int(rng.choice(len(signals), p=p / p.sum()))]

    def to_dict(self) -> Dict[str, Any]:
        data = self.parameters()
        data["family"] = self.family
        data["catalogue"] = [[list(step) for step in trace] for trace in self.catalogue]
        return data

    def parameters(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "outcomes": list(self.outcomes),
            "table": [[s, a, list(c)] for s, a, c in self.table],
            "alpha": self.alpha,
        }


FAMILIES = {
    HistogramModel.family: HistogramModel,
    GaussianModel.family: GaussianModel,
    CategoricalModel.family: CategoricalModel,
    TraceModel.family: TraceModel,
}


def model_from_dict(data: Dict[str, Any]):
    """
    Rebuild a model from its serialized form.

    Raises:
        KeyError: If the family is unknown
        ValueError: If the parameters are invalid
    """
    family = data["family"]
    if family == HistogramModel.family:
        return HistogramModel(
            tuple(int(c) for c in data["counts"]),
            float(data["alpha"]),
            tuple(float(e) for e in data.get("bin_edges", [])),
        )
    if family == GaussianModel.family:
        return GaussianModel(
            float(data["mu"]),
            float(data["sd"]),
            float(data["sd_floor"]),
            SignalKind(data.get("emits", SignalKind.SCALAR.value)),
        )
    if family == CategoricalModel.family:
        return CategoricalModel(
            tuple(float(v) for v in data["values"]),
            tuple(int(c) for c in data["counts"]),
            float(data["alpha"]),
        )
    if family == TraceModel.family:
        kind = SignalKind(data["kind"])
        cast = int if kind is SignalKind.TRANSITION else float
        return TraceModel(
            kind=kind,
            outcomes=tuple(cast(o) for o in data["outcomes"]),
            table=tuple((int(s), int(a), tuple(int(c) for c in cs)) for s, a, cs in data["table"]),
            alpha=float(data["alpha"]),
            catalogue=tuple(
                tuple((int(s), int(a), cast(o)) for s, a, o in trace)
                for trace in data.get("catalogue", [])
            ),
        )
    raise KeyError(f"Unknown model family '{family}'")


def likelihood(model: ObservationModel, signal: Signal) -> float:
    """
    Probability (or density) of a signal under an observation model.

    Trace likelihoods are accumulated in log space and exponentiated here.

    Raises:
        FamilyMismatchError: If the signal does not belong to the model's family
    """
    return model.likelihood(signal)
