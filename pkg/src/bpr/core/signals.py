"""Observation signals and episode outcomes."""

from dataclasses import dataclass
from typing import Any, Tuple, Union

from ..records import SignalKind

Step = Tuple[int, int, int]
RewardStep = Tuple[int, int, float]


@dataclass(frozen=True)
class TransitionTrace:
    """Sequence of (state, action, next_state) tuples of one episode."""

    steps: Tuple[Step, ...]

    kind = SignalKind.TRANSITION

    def summary(self) -> str:
        states = [self.steps[0][0]] if self.steps else []
        states += [n for _, _, n in self.steps]
        return "sas:" + ">".join(str(s) for s in states)


@dataclass(frozen=True)
class RewardTrace:
    """Sequence of (state, action, reward) tuples of one episode."""

    steps: Tuple[RewardStep, ...]

    kind = SignalKind.REWARD

    def summary(self) -> str:
        return "sar:" + ",".join(f"{s}:{r:g}" for s, _, r in self.steps)


@dataclass(frozen=True)
class EpisodicReturn:
    """Total return of one episode used as the signal."""

    value: float

    kind = SignalKind.RETURN

    def summary(self) -> str:
        return f"u:{self.value:g}"


@dataclass(frozen=True)
class ScalarReal:
    """Domain-specific real-valued signal."""

    value: float

    kind = SignalKind.SCALAR

    def summary(self) -> str:
        return f"r:{self.value:.4g}"


@dataclass(frozen=True)
class CategoryBin:
    """Domain-specific categorical signal (bin id)."""

    bin: int

    kind = SignalKind.CATEGORY

    def summary(self) -> str:
        return f"bin:{self.bin}"


Signal = Union[TransitionTrace, RewardTrace, EpisodicReturn, ScalarReal, CategoryBin]


def make_signal(kind: SignalKind, payload: Any) -> Signal:
    """
    Wrap a raw simulator payload into a signal of the given kind.

    Args:
        kind: Signal kind
        payload: Trace steps, a real value or a bin id

    Returns:
        Signal instance
    """
    if kind is SignalKind.TRANSITION:
        return TransitionTrace(tuple((int(s), int(a), int(n)) for s, a, n in payload))
    if kind is SignalKind.REWARD:
        return RewardTrace(tuple((int(s), int(a), float(r)) for s, a, r in payload))
    if kind is SignalKind.RETURN:
        return EpisodicReturn(float(payload))
    if kind is SignalKind.SCALAR:
        return ScalarReal(float(payload))
    return CategoryBin(int(payload))


@dataclass(frozen=True)
class EpisodeOutcome:
    """Signal and realised utility of one policy execution."""

    signal: Signal
    utility: float

    def __post_init__(self):
        if isinstance(self.signal, EpisodicReturn) and self.signal.value != self.utility:
            raise ValueError(
                f"Episodic return signal {self.signal.value} differs from utility {self.utility}"
            )
