"""Utility functions for Bayesian Policy Reuse."""

import logging
import zlib
from typing import Sequence, Tuple

import numpy as np
from scipy.stats import spearmanr

logger = logging.getLogger(__name__)

KeyPart = int | float | str


def _key_word(part: KeyPart) -> int:
    """Map one key part to a stable 32-bit word."""
    if isinstance(part, bool):
        return int(part)
    if isinstance(part, int) and part >= 0:
        return part
    return zlib.crc32(repr(part).encode("utf-8"))


def derive_rng(seed: int, *keys: KeyPart) -> np.random.Generator:
    """
    Build an independent random stream for one unit of work.

    The stream is a counter-based Philox generator keyed by the master seed and
    the given keys, so the same (seed, keys) always yields the same numbers no
    matter how many other streams exist or in which order they are used.

    Args:
        seed: Master seed of the experiment
        *keys: Task index, episode, purpose tag, ... (ints, floats or strings)

    Returns:
        Seeded numpy Generator
    """
    words = tuple(_key_word(k) for k in keys)
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=words)
    return np.random.Generator(np.random.Philox(sequence))


def format_number(value: float | int) -> str:
    """Format a number for CSV output with 6 significant digits."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.6g}"


def paired_bootstrap_ci(
    a: Sequence[float],
    b: Sequence[float],
    rng: np.random.Generator,
    n_resamples: int = 10_000,
    level: float = 0.95,
) -> Tuple[float, float]:
    """
    Bootstrap confidence interval of mean(a - b) for paired samples.

    Args:
        a: First sample
        b: Second sample, paired element-wise with ``a``
        rng: Random stream for resampling
        n_resamples: Number of bootstrap resamples
        level: Confidence level

    Returns:
        (low, high) interval bounds
    """
    diff = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    idx = rng.integers(0, diff.size, size=(n_resamples, diff.size))
    means = diff[idx].mean(axis=1)
    tail = (1.0 - level) / 2.0
    return float(np.quantile(means, tail)), float(np.quantile(means, 1.0 - tail))


def spearman_rho(x: Sequence[float], y: Sequence[float]) -> float:
    """Spearman rank correlation between two sequences."""
    result = spearmanr(x, y)
    return float(result.statistic if hasattr(result, "statistic") else result[0])
