"""Tests for the UCB1 and GP-UCB baselines."""

import logging
import math

import numpy as np
import pytest

from bpr.baselines import (
    GpUcbState,
    GpUcbStrategy,
    Ucb1State,
    Ucb1Strategy,
    gpucb_select,
    gpucb_update,
    performance_kernel,
    ucb1_select,
    ucb1_update,
)
from bpr.baselines.gpucb import JITTER
from bpr.core import Belief, EpisodeOutcome, KnowledgeBase, PolicyInfo, ScalarReal, TypeInfo
from bpr.exceptions import SingularKernelError
from bpr.models import CategoricalModel
from bpr.records import SignalKind

from factories import build_kb


def categorical_kb(counts):
    """Knowledge base whose return models are categorical over {-3, 10}."""
    perf = tuple(
        tuple(CategoricalModel((-3.0, 10.0), c, alpha=0.0) for c in row) for row in counts
    )
    return KnowledgeBase(
        domain="test",
        signal_kind=SignalKind.RETURN,
        types=tuple(TypeInfo(f"t{i}", float(i)) for i in range(len(perf))),
        policies=tuple(PolicyInfo(j, f"p{j}") for j in range(len(perf[0]))),
        perf=perf,
        obs=perf,
        prior=Belief.uniform(len(perf)),
        utility_range=(-3.0, 10.0),
    )


class TestUcb1:
    def test_unpulled_arms_follow_prior(self):
        state = Ucb1State.from_prior([0.2, 0.8, 0.5], (0.0, 1.0))
        assert ucb1_select(state) == 1

    def test_deterministic_rewards(self):
        state = Ucb1State.from_prior([0.5, 0.5], (0.0, 1.0))
        pulls = np.zeros(2)
        for _ in range(10_000):
            arm = ucb1_select(state)
            ucb1_update(state, arm, 1.0 if arm == 0 else 0.0)
            pulls[arm] += 1
        assert pulls[0] / pulls.sum() > 0.99

    def test_rescale(self):
        state = Ucb1State.from_prior([0.0], (-3.0, 10.0))
        assert state.rescale(10.0) == 1.0
        assert state.rescale(-3.0) == 0.0
        assert state.rescale(100.0) == 1.0
        assert state.rescale(3.5) == pytest.approx(0.5)

    def test_virtual_pull(self):
        state = Ucb1State.from_prior([-3.0, 10.0], (-3.0, 10.0))
        assert state.t == 2
        np.testing.assert_allclose(state.means, [0.0, 1.0])
        ucb1_update(state, 0, 10.0)
        np.testing.assert_allclose(state.means, [0.5, 1.0])
        bonus = np.sqrt(2 * math.log(3) / state.counts)
        np.testing.assert_allclose(state.indices(), state.means + bonus)

    def test_strategy_uses_prior_expectations(self):
        kb = build_kb([[0.0, 0.6, 0.2], [0.1, 0.4, 0.9]], utility_range=(0.0, 1.0))
        strategy = Ucb1Strategy()
        strategy.reset(kb)
        assert strategy.select(kb, kb.prior, 1, 5, np.random.default_rng(0)) == 2
        strategy.observe(2, EpisodeOutcome(ScalarReal(0.0), 0.0))
        assert strategy.state.counts[2] == 2


class TestPerformanceKernel:
    def test_unit_diagonal_and_length(self):
        means = np.array([[0.0, 3.0, 0.0], [0.0, 4.0, 1.0]])
        kernel, length = performance_kernel(means)
        np.testing.assert_allclose(np.diag(kernel), 1.0)
        assert length == pytest.approx(np.median([5.0, 1.0, np.sqrt(9 + 9)]))
        np.testing.assert_allclose(kernel, kernel.T)

    def test_single_policy(self):
        kernel, length = performance_kernel(np.array([[1.0], [2.0]]))
        np.testing.assert_allclose(kernel, [[1.0]])
        assert length == 1.0


class TestGpUcb:
    @pytest.fixture
    def kb(self):
        rng = np.random.default_rng(42)
        return build_kb(rng.normal(size=(5, 6)), sds=0.5)

    def test_no_observations_picks_lowest_index(self, kb):
        state = GpUcbState.from_knowledge_base(kb)
        assert gpucb_select(state, 1) == 0
        mean, sd = state.posterior()
        np.testing.assert_allclose(mean, kb.means.mean())
        np.testing.assert_allclose(sd, np.sqrt(np.var(kb.means)))

    def test_interpolates_at_low_noise(self, kb):
        state = GpUcbState.from_knowledge_base(kb, noise=1e-6)
        gpucb_update(state, 2, 3.7)
        mean, sd = state.posterior()
        assert mean[2] == pytest.approx(3.7, abs=1e-4)
        assert sd[2] < 1e-2

    def test_identical_columns_share_posterior(self):
        kb = build_kb([[1.0, 1.0, 0.0, 2.0], [0.5, 0.5, 3.0, 1.0]])
        state = GpUcbState.from_knowledge_base(kb, noise=0.1)
        gpucb_update(state, 2, 1.5)
        gpucb_update(state, 3, -0.5)
        mean, sd = state.posterior()
        assert mean[0] == pytest.approx(mean[1])
        assert sd[0] == pytest.approx(sd[1])

    def test_variance_never_grows(self, kb):
        state = GpUcbState.from_knowledge_base(kb)
        rng = np.random.default_rng(42)
        _, previous = state.posterior()
        for _ in range(10):
            gpucb_update(state, int(rng.integers(6)), float(rng.normal()))
            _, sd = state.posterior()
            assert np.all(sd <= previous + 1e-9)
            previous = sd

    def test_default_noise_is_mean_model_variance(self, kb):
        assert GpUcbState.from_knowledge_base(kb).noise == pytest.approx(0.25)

    def test_default_noise_of_categorical_models(self):
        kb = categorical_kb([[(1, 3), (3, 1)], [(1, 1), (0, 4)]])
        variances = [0.25 * 0.75 * 169.0, 0.25 * 0.75 * 169.0, 0.25 * 169.0, 0.0]
        noise = GpUcbState.from_knowledge_base(kb).noise
        assert noise == pytest.approx(np.mean(variances))

    def test_noise_of_point_masses_is_floored(self):
        kb = categorical_kb([[(0, 4), (4, 0)], [(4, 0), (0, 4)]])
        assert GpUcbState.from_knowledge_base(kb).noise == JITTER

    def test_beta(self, kb):
        state = GpUcbState.from_knowledge_base(kb, delta=0.1)
        assert state.beta(3) == pytest.approx(2 * math.log(6 * 9 * math.pi**2 / 0.6))

    def test_jitter_recovers_repeated_observation(self, caplog):
        state = GpUcbState(kernel=np.ones((2, 2)), prior_mean=0.0, noise=0.0)
        gpucb_update(state, 1, 0.5)
        gpucb_update(state, 1, 0.5)
        with caplog.at_level(logging.WARNING):
            mean, _ = state.posterior()
        assert np.all(np.isfinite(mean))
        assert "jitter" in caplog.text

    def test_singular_kernel(self):
        state = GpUcbState(kernel=np.array([[1.0, 2.0], [2.0, 1.0]]), prior_mean=0.0, noise=0.0)
        gpucb_update(state, 0, 1.0)
        gpucb_update(state, 1, 1.0)
        with pytest.raises(SingularKernelError):
            state.posterior()

    def test_strategy(self, kb):
        strategy = GpUcbStrategy(noise=0.25)
        strategy.reset(kb)
        rng = np.random.default_rng(0)
        first = strategy.select(kb, kb.prior, 1, 10, rng)
        strategy.observe(first, EpisodeOutcome(ScalarReal(-5.0), -5.0))
        assert strategy.state.observed == [(first, -5.0)]
        assert strategy.select(kb, kb.prior, 2, 10, rng) != first
