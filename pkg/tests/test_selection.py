"""Tests for the policy selection rules, look-ahead and strategy factory."""

import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import quad

from bpr.baselines import GpUcbStrategy, Ucb1Strategy
from bpr.core import (
    Belief,
    CategoryBin,
    KnowledgeBase,
    PolicyInfo,
    ScalarReal,
    TypeInfo,
    update_belief,
)
from bpr.models import CategoricalModel, GaussianModel
from bpr.records import SignalKind
from bpr.selection import (
    EntropyMode,
    StrategyConfig,
    StrategyKind,
    build_strategy,
    default_kappa,
    default_u_plus,
    expected_posterior,
    knowledge_gradient,
    posterior_entropy,
    select_be,
    select_be_pure,
    select_ei,
    select_eps_greedy,
    select_fixed,
    select_greedy,
    select_kg,
    select_pi,
    select_sample_belief,
    signal_outcomes,
)
from bpr.selection.strategies import (
    BeliefEntropyStrategy,
    EntropyStrategy,
    ExpectedImprovementStrategy,
    FixedPolicyStrategy,
    GreedyStrategy,
    KnowledgeGradientStrategy,
)

from factories import build_kb, mixed_signal, point_signal


@pytest.fixture
def reveal_kb():
    """Equal expected utilities; only policy 1 reveals the type."""
    obs = [
        [mixed_signal([0.5, 0.5]), point_signal(0, 2)],
        [mixed_signal([0.5, 0.5]), point_signal(1, 2)],
    ]
    return build_kb([[1.0, 0.0], [0.0, 1.0]], obs=obs, signal_kind=SignalKind.RETURN)


def random_discrete_kb(rng, n_types, n_policies, n_signals):
    """Random means with categorical observation models over n_signals returns."""
    obs = [
        [mixed_signal(rng.dirichlet(np.ones(n_signals))) for _ in range(n_policies)]
        for _ in range(n_types)
    ]
    return build_kb(
        rng.normal(size=(n_types, n_policies)),
        obs=obs,
        prior=rng.dirichlet(np.ones(n_types)),
        signal_kind=SignalKind.RETURN,
    )


def random_gaussian_kb(rng, n_types, n_policies):
    """Random Gaussian performance models and prior."""
    shape = (n_types, n_policies)
    return build_kb(
        rng.normal(0.0, 3.0, size=shape),
        sds=rng.uniform(0.5, 3.0, size=shape),
        prior=rng.dirichlet(np.ones(n_types)),
        utility_range=(-20.0, 20.0),
    )


def normal_tail(u, mu, sd):
    return 0.5 * math.erfc((u - mu) / (sd * math.sqrt(2.0)))


def mixed_perf_kb(perf_row, utility_range=(0.0, 1.0)):
    """One type whose performance models are given directly."""
    row = tuple(perf_row)
    return KnowledgeBase(
        domain="test",
        signal_kind=SignalKind.RETURN,
        types=(TypeInfo("t0", 0.0),),
        policies=tuple(PolicyInfo(j, f"p{j}") for j in range(len(row))),
        perf=(row,),
        obs=(row,),
        prior=Belief.uniform(1),
        utility_range=utility_range,
    )


class TestGreedy:
    def test_point_mass(self):
        kb = build_kb([[-1.0, 5.0, 2.0], [9.0, 0.0, 0.0]])
        assert select_greedy(kb, Belief.point_mass(2, 0)) == 1

    def test_dominating_policy(self):
        kb = build_kb([[0.0, 3.0, 1.0], [-2.0, 4.0, 3.5]])
        assert select_greedy(kb, kb.prior) == 1

    def test_tie_goes_to_lowest_index(self):
        kb = build_kb([[1.0, 0.0], [0.0, 1.0]])
        assert select_greedy(kb, kb.prior) == 0


class TestEpsGreedy:
    def test_zero_epsilon_is_greedy(self):
        kb = build_kb([[0.0, 3.0, 1.0], [2.0, 0.0, 1.0]], prior=[0.3, 0.7])
        for seed in range(50):
            rng = np.random.default_rng(seed)
            assert select_eps_greedy(kb, kb.prior, 0.0, rng) == select_greedy(kb, kb.prior)

    def test_full_exploration_is_uniform(self):
        kb = build_kb([[0.0, 1.0, 2.0, 3.0]])
        rng = np.random.default_rng(42)
        draws = [select_eps_greedy(kb, kb.prior, 1.0, rng) for _ in range(100_000)]
        np.testing.assert_allclose(np.bincount(draws, minlength=4) / 1e5, [0.25] * 4, atol=0.01)

    def test_mixture_frequency(self):
        kb = build_kb([[0.0, 1.0, 3.0, 2.0]])
        rng = np.random.default_rng(42)
        draws = np.array([select_eps_greedy(kb, kb.prior, 0.3, rng) for _ in range(100_000)])
        assert np.mean(draws == 2) == pytest.approx(0.7 + 0.3 / 4, abs=0.01)

    def test_epsilon_range(self):
        kb = build_kb([[0.0, 1.0]])
        with pytest.raises(ValueError):
            select_eps_greedy(kb, kb.prior, 1.5, np.random.default_rng(0))


class TestSampleBelief:
    def test_point_mass_is_deterministic(self):
        kb = build_kb([[0.0, 1.0], [1.0, 0.0]])
        for seed in range(20):
            rng = np.random.default_rng(seed)
            assert select_sample_belief(kb, Belief.point_mass(2, 1), rng) == 0

    def test_frequencies_follow_belief(self):
        kb = build_kb([[0.0, 1.0], [1.0, 0.0]])
        rng = np.random.default_rng(42)
        draws = np.array([select_sample_belief(kb, kb.prior, rng) for _ in range(100_000)])
        assert np.mean(draws == 0) == pytest.approx(0.5, abs=0.01)

    def test_shared_best_response(self):
        kb = build_kb([[0.0, 2.0], [1.0, 3.0], [-1.0, 0.0]])
        for seed in range(20):
            assert select_sample_belief(kb, kb.prior, np.random.default_rng(seed)) == 1


class TestProbabilityOfImprovement:
    def test_heavier_tail_wins(self):
        kb = build_kb([[0.0, 1.0]], sds=1.0)
        assert select_pi(kb, Belief.point_mass(1, 0), u_plus=2.0) == 1

    def test_threshold_below_support(self, caplog):
        kb = build_kb([[0.0, 1.0]], sds=1.0)
        with caplog.at_level(logging.WARNING):
            assert select_pi(kb, kb.prior, u_plus=-1e3) == 0
        assert "does not exceed the best expected utility" in caplog.text

    def test_threshold_at_best_expected_utility(self, caplog):
        kb = build_kb([[0.0, 1.0], [1.0, 0.0]], sds=1.0)
        with caplog.at_level(logging.WARNING):
            select_pi(kb, kb.prior, u_plus=0.5)
        assert "does not exceed the best expected utility" in caplog.text

    def test_threshold_above_best_is_silent(self, caplog):
        kb = build_kb([[0.0, 1.0], [1.0, 0.0]], sds=1.0)
        with caplog.at_level(logging.WARNING):
            select_pi(kb, kb.prior, u_plus=0.75)
        assert "does not exceed" not in caplog.text

    def test_point_mass_below_threshold_loses(self):
        u_plus, delta = 4.0, 0.5
        kb = mixed_perf_kb(
            [CategoricalModel((u_plus - delta,), (1,), alpha=0.0), GaussianModel(u_plus, 1.0)]
        )
        assert select_pi(kb, kb.prior, u_plus=u_plus) == 1

    def test_default_threshold(self):
        kb = build_kb([[0.0, 2.0]], utility_range=(-10.0, 10.0))
        assert default_u_plus(kb, kb.prior) == pytest.approx(6.0)
        assert default_u_plus(kb, kb.prior, u_max=4.0) == pytest.approx(3.0)
        assert select_pi(kb, kb.prior) == 1


class TestExpectedImprovement:
    def test_normal_cdf_example(self):
        kb = build_kb([[0.0, 1.0]], sds=1.0)
        np.testing.assert_allclose(kb.cdf(1.0)[0], [0.8413, 0.5], atol=1e-4)
        assert select_ei(kb, Belief.point_mass(1, 0)) == 1

    def test_single_policy(self):
        kb = build_kb([[3.0], [-1.0]])
        assert select_ei(kb, kb.prior) == 0

    def test_identical_policies(self):
        kb = build_kb([[1.0, 1.0], [2.0, 2.0]])
        assert select_ei(kb, kb.prior) == 0

    def test_far_cap_is_uncapped(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            kb = random_gaussian_kb(rng, 4, 5)
            assert select_ei(kb, kb.prior, u_max=1e6) == select_ei(kb, kb.prior)

    def test_cap_below_best_expected_utility(self, caplog):
        kb = build_kb([[0.0, 1.0]], sds=1.0)
        with caplog.at_level(logging.WARNING):
            select_ei(kb, kb.prior, u_max=0.5)
        assert "EI cap" in caplog.text


class TestImprovementByEnumeration:
    """PI and EI against sums written out type by type on random libraries."""

    @pytest.fixture
    def libraries(self):
        rng = np.random.default_rng(42)
        return [
            random_gaussian_kb(rng, int(rng.integers(1, 11)), int(rng.integers(1, 11)))
            for _ in range(30)
        ]

    @staticmethod
    def u_bar(kb):
        beta = kb.prior.weights
        return max(
            sum(beta[i] * kb.perf[i][j].mean for i in range(kb.n_types))
            for j in range(kb.n_policies)
        )

    def test_pi(self, libraries):
        for kb in libraries:
            beta = kb.prior.weights
            u_plus = self.u_bar(kb) + 1.0
            tails = [
                sum(
                    beta[i] * normal_tail(u_plus, *kb.perf[i][j].gaussian_params())
                    for i in range(kb.n_types)
                )
                for j in range(kb.n_policies)
            ]
            assert select_pi(kb, kb.prior, u_plus=u_plus) == int(np.argmax(tails))

    def test_ei(self, libraries):
        for kb in libraries:
            beta = kb.prior.weights
            u_bar = self.u_bar(kb)
            shortfalls = [
                sum(
                    beta[i] * (1.0 - normal_tail(u_bar, *kb.perf[i][j].gaussian_params()))
                    for i in range(kb.n_types)
                )
                for j in range(kb.n_policies)
            ]
            assert select_ei(kb, kb.prior) == int(np.argmin(shortfalls))

    def test_capped_ei_integrates_the_density(self, libraries):
        for kb in libraries[:10]:
            beta = kb.prior.weights
            u_bar = self.u_bar(kb)
            u_max = u_bar + 2.0
            masses = [
                quad(
                    lambda u, j=j: sum(
                        beta[i] * kb.perf[i][j].pdf(u) for i in range(kb.n_types)
                    ),
                    u_bar,
                    u_max,
                )[0]
                for j in range(kb.n_policies)
            ]
            assert select_ei(kb, kb.prior, u_max=u_max) == int(np.argmax(masses))


class TestExpectedPosterior:
    def test_point_mass(self, disjoint_kb):
        belief = Belief.point_mass(2, 1)
        np.testing.assert_allclose(expected_posterior(disjoint_kb, belief, 0).weights, [0, 1])

    def test_uninformative_signal(self, disjoint_kb):
        belief = Belief.from_weights([0.3, 0.7])
        np.testing.assert_allclose(
            expected_posterior(disjoint_kb, belief, 1).weights, [0.3, 0.7], atol=1e-12
        )

    def test_disjoint_signals_average_back(self, disjoint_kb):
        outcomes = signal_outcomes(disjoint_kb, disjoint_kb.prior, 0)
        np.testing.assert_allclose(outcomes.weights, [0.5, 0.5])
        np.testing.assert_allclose(outcomes.posteriors, [[1, 0], [0, 1]])
        np.testing.assert_allclose(
            expected_posterior(disjoint_kb, disjoint_kb.prior, 0).weights, [0.5, 0.5]
        )

    def test_gaussian_quadrature_preserves_mean(self):
        kb = build_kb([[0.0, 0.0], [1.5, 0.1], [3.0, 0.2]], sds=1.0)
        belief = Belief.from_weights([0.2, 0.5, 0.3])
        for policy in range(2):
            np.testing.assert_allclose(
                expected_posterior(kb, belief, policy).weights, belief.weights, atol=1e-3
            )

    def test_matches_sampled_posteriors(self):
        rng = np.random.default_rng(42)
        kb = random_discrete_kb(rng, 3, 2, 4)
        beta = kb.prior.weights
        lik = np.array([[row[0].probabilities[v] for row in kb.obs] for v in range(4)])
        n = 1_000_000
        types = rng.choice(3, size=n, p=beta)
        signals = np.empty(n, dtype=int)
        for t in range(3):
            idx = np.flatnonzero(types == t)
            signals[idx] = rng.choice(4, size=idx.size, p=lik[:, t])
        joint = lik[signals] * beta
        posteriors = joint / joint.sum(axis=1, keepdims=True)
        se = posteriors.std(axis=0) / math.sqrt(n)
        expected = expected_posterior(kb, kb.prior, 0).weights
        assert np.all(np.abs(posteriors.mean(axis=0) - expected) <= 3 * se)

    def test_monte_carlo_fallback(self):
        gauss = GaussianModel(0.0, 1.0)
        point = CategoricalModel((5.0,), (1,), alpha=0.0)
        kb = KnowledgeBase(
            domain="test",
            signal_kind=SignalKind.SCALAR,
            types=(TypeInfo("t0", 0.0), TypeInfo("t1", 1.0)),
            policies=(PolicyInfo(0, "p0"),),
            perf=((gauss,), (gauss,)),
            obs=((gauss,), (point,)),
            prior=Belief.uniform(2),
        )
        rng = np.random.default_rng(42)
        np.testing.assert_allclose(
            expected_posterior(kb, kb.prior, 0, rng).weights, [0.5, 0.5], atol=0.02
        )
        assert posterior_entropy(kb, kb.prior, 0, rng=rng) < 1e-3


class TestBeliefEntropy:
    def test_point_mass_is_greedy(self):
        kb = build_kb([[0.0, 2.0], [5.0, 0.0]])
        assert select_be(kb, Belief.point_mass(2, 0), kappa=100.0) == 1

    def test_small_kappa_is_greedy(self):
        kb = build_kb([[0.0, 2.0, 1.0], [5.0, 0.0, 1.0]], prior=[0.9, 0.1])
        assert select_be(kb, kb.prior, kappa=1e-9) == select_greedy(kb, kb.prior)

    @pytest.mark.parametrize("kappa", [1e-6, 1.0, 100.0])
    def test_prefers_discriminating_policy(self, reveal_kb, kappa):
        assert select_be(reveal_kb, reveal_kb.prior, kappa=kappa) == 1

    def test_entropy_of_each_policy(self, reveal_kb):
        assert posterior_entropy(reveal_kb, reveal_kb.prior, 0) == pytest.approx(math.log(2))
        assert posterior_entropy(reveal_kb, reveal_kb.prior, 1) == pytest.approx(0.0, abs=1e-12)

    def test_averaged_mode_cannot_see_information(self, reveal_kb):
        for policy in range(2):
            assert posterior_entropy(
                reveal_kb, reveal_kb.prior, policy, mode="averaged"
            ) == pytest.approx(math.log(2))
        assert select_be(reveal_kb, reveal_kb.prior, kappa=1.0, mode="averaged") == 0

    def test_pure_entropy(self, reveal_kb):
        assert select_be_pure(reveal_kb, reveal_kb.prior) == 1

    def test_kappa_must_be_positive(self, reveal_kb):
        with pytest.raises(ValueError):
            select_be(reveal_kb, reveal_kb.prior, kappa=0.0)

    def test_default_kappa(self):
        kb = build_kb([[0.0], [1.0], [2.0], [3.0]], utility_range=(-3.0, 10.0))
        assert default_kappa(kb) == pytest.approx(13.0 / math.log(4))
        assert default_kappa(kb, 0.5) == pytest.approx(6.5 / math.log(4))


class TestKnowledgeGradient:
    def test_point_mass(self, disjoint_kb):
        for policy in range(2):
            assert knowledge_gradient(disjoint_kb, Belief.point_mass(2, 0), policy) == 0.0

    def test_uninformative(self, disjoint_kb):
        assert knowledge_gradient(disjoint_kb, disjoint_kb.prior, 1) == pytest.approx(0.0)

    def test_disjoint_signals(self, disjoint_kb):
        assert knowledge_gradient(disjoint_kb, disjoint_kb.prior, 0) == pytest.approx(0.5)

    def test_matches_enumeration(self):
        rng = np.random.default_rng(42)
        kb = random_discrete_kb(rng, 3, 3, 3)
        beta = kb.prior.weights
        current = (beta @ kb.means).max()
        for policy in range(3):
            value = 0.0
            for v in range(3):
                signal_lik = np.array([row[policy].probabilities[v] for row in kb.obs])
                q = beta @ signal_lik
                if q == 0:
                    continue
                posterior = beta * signal_lik / q
                value += q * (posterior @ kb.means).max()
            assert knowledge_gradient(kb, kb.prior, policy) == pytest.approx(value - current)

    def test_never_negative(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            kb = random_discrete_kb(rng, 4, 3, 3)
            for policy in range(3):
                assert knowledge_gradient(kb, kb.prior, policy) >= 0.0

    @pytest.mark.parametrize("t", [0, 3])
    def test_episode_range(self, disjoint_kb, t):
        with pytest.raises(ValueError):
            knowledge_gradient(disjoint_kb, disjoint_kb.prior, 0, t=t, horizon=2)

    @pytest.mark.parametrize("t", [1, 2])
    def test_episodes_inside_the_horizon(self, disjoint_kb, t):
        assert knowledge_gradient(disjoint_kb, disjoint_kb.prior, 0, t=t, horizon=2) >= 0.0


class TestSelectKnowledgeGradient:
    def test_last_episode_is_greedy(self, reveal_kb):
        kb = build_kb([[0.0, 2.0], [5.0, 0.0]], obs=reveal_kb.obs, signal_kind=SignalKind.RETURN)
        assert select_kg(kb, kb.prior, t=4, horizon=4) == select_greedy(kb, kb.prior)

    def test_point_mass_is_greedy(self, reveal_kb):
        for t in range(1, 5):
            assert select_kg(reveal_kb, Belief.point_mass(2, 1), t, 4) == 1

    def test_picks_informative_policy(self, reveal_kb):
        assert select_kg(reveal_kb, reveal_kb.prior, t=1, horizon=2) == 1

    @pytest.mark.parametrize("t", [0, 5])
    def test_episode_range(self, reveal_kb, t):
        with pytest.raises(ValueError):
            select_kg(reveal_kb, reveal_kb.prior, t=t, horizon=4)
        with pytest.raises(ValueError):
            select_kg(reveal_kb, Belief.point_mass(2, 1), t=t, horizon=4)


class TestHedgingLibrary:
    """Policy 0 pays well on both types but its reward cannot tell them apart."""

    @pytest.fixture
    def hedge_kb(self):
        return build_kb(
            [[195.0, 210.0, 170.0], [195.0, 170.0, 210.0]],
            sds=20.0,
            utility_range=(-250.0, 250.0),
        )

    def test_greedy_never_learns(self, hedge_kb):
        rng = np.random.default_rng(42)
        belief = hedge_kb.prior
        for _ in range(20):
            policy = select_greedy(hedge_kb, belief)
            assert policy == 0
            belief = update_belief(hedge_kb, belief, policy, ScalarReal(rng.normal(195.0, 20.0)))
        assert belief.entropy() == pytest.approx(math.log(2))

    def test_sampling_the_belief_leaves_the_hedge(self, hedge_kb):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            assert select_sample_belief(hedge_kb, hedge_kb.prior, rng) in (1, 2)

    def test_lookahead_leaves_the_hedge(self, hedge_kb):
        assert select_be(hedge_kb, hedge_kb.prior) in (1, 2)
        assert select_kg(hedge_kb, hedge_kb.prior, t=1, horizon=10) in (1, 2)

    def test_informative_policy_resolves_the_type(self, hedge_kb):
        rng = np.random.default_rng(42)
        belief = hedge_kb.prior
        for _ in range(10):
            belief = update_belief(hedge_kb, belief, 1, ScalarReal(rng.normal(210.0, 20.0)))
        assert belief.weights[0] > 0.99


class TestFixed:
    def test_fixed(self, disjoint_kb):
        assert select_fixed(disjoint_kb, 1) == 1

    def test_outside_library(self, disjoint_kb):
        with pytest.raises(ValueError):
            select_fixed(disjoint_kb, 2)


class TestOneTypeLibrary:
    @pytest.mark.parametrize(
        "config",
        [
            StrategyConfig(kind="greedy"),
            StrategyConfig(kind="eps_greedy", epsilon=0.0),
            StrategyConfig(kind="sample_belief"),
            StrategyConfig(kind="pi"),
            StrategyConfig(kind="ei"),
            StrategyConfig(kind="be"),
            StrategyConfig(kind="entropy"),
            StrategyConfig(kind="kg"),
        ],
    )
    def test_best_response(self, config):
        kb = build_kb([[-1.0, 5.0, 2.0]], utility_range=(-10.0, 10.0))
        strategy = build_strategy(config)
        strategy.reset(kb)
        assert strategy.select(kb, kb.prior, 1, 3, np.random.default_rng(0)) == 1


class TestStrategyConfig:
    def test_name_defaults_to_kind(self):
        assert StrategyConfig(kind="kg").name == "kg"
        assert StrategyConfig(kind="fixed", policy=1, label="3-iron").name == "3-iron"

    @pytest.mark.parametrize(
        "data",
        [
            {"kind": "eps_greedy"},
            {"kind": "fixed"},
            {"kind": "greedy", "epsilon": 0.1},
            {"kind": "ei", "kappa": 1.0},
            {"kind": "ei", "u_plus": 1.0},
            {"kind": "eps_greedy", "epsilon": 1.5},
            {"kind": "be", "kappa": -1.0},
            {"kind": "gpucb", "delta": 1.0},
            {"kind": "thompson"},
        ],
    )
    def test_invalid(self, data):
        with pytest.raises(ValidationError):
            StrategyConfig.model_validate(data)

    @pytest.mark.parametrize(
        "config,cls",
        [
            (StrategyConfig(kind="greedy"), GreedyStrategy),
            (StrategyConfig(kind="be", entropy_mode="averaged"), BeliefEntropyStrategy),
            (StrategyConfig(kind="entropy"), EntropyStrategy),
            (StrategyConfig(kind="kg"), KnowledgeGradientStrategy),
            (StrategyConfig(kind="fixed", policy=2), FixedPolicyStrategy),
            (StrategyConfig(kind="ucb1"), Ucb1Strategy),
            (StrategyConfig(kind="gpucb", delta=0.05), GpUcbStrategy),
        ],
    )
    def test_build_strategy(self, config, cls):
        strategy = build_strategy(config)
        assert isinstance(strategy, cls)
        assert strategy.name == config.name

    def test_entropy_settings_reach_strategy(self):
        strategy = build_strategy(
            StrategyConfig(kind="be", kappa_scale=2.0, entropy_mode=EntropyMode.AVERAGED)
        )
        kb = build_kb([[0.0], [1.0]], utility_range=(0.0, 4.0))
        strategy.reset(kb)
        assert strategy.mode is EntropyMode.AVERAGED
        assert strategy._kappa == pytest.approx(2.0 * 4.0 / math.log(2))

    def test_entropy_mode_defaults_to_per_signal(self):
        strategy = build_strategy(StrategyConfig(kind="be"))
        assert strategy.mode is EntropyMode.EXPECTED
        assert StrategyKind("be") is StrategyKind.BE

    def test_ei_cap_reaches_strategy(self):
        strategy = build_strategy(StrategyConfig(kind="ei", u_max=5.0))
        assert isinstance(strategy, ExpectedImprovementStrategy)
        assert strategy.u_max == 5.0


class TestGolfWorkedExample:
    """A 179-yard hole played from a uniform belief over the four training holes."""

    def test_first_shot_collapses_belief(self, golf_kb):
        belief = update_belief(golf_kb, golf_kb.prior, 0, CategoryBin(5))
        assert golf_kb.prior.entropy() == pytest.approx(1.3863, abs=1e-4)
        assert belief.entropy() == pytest.approx(0.2237, abs=0.15)
        assert int(np.argmax(belief.weights)) == [t.task for t in golf_kb.types].index(170.0)

    def test_greedy_keeps_three_iron(self, golf_kb):
        belief = update_belief(golf_kb, golf_kb.prior, 0, CategoryBin(5))
        entropies = []
        for observed in (4, 3, 4, 3, 4, 4, 3):
            policy = select_greedy(golf_kb, belief)
            assert policy == 1
            belief = update_belief(golf_kb, belief, policy, CategoryBin(observed))
            entropies.append(belief.entropy())
        assert entropies[0] < 0.1
        assert max(entropies[1:]) < 0.01
