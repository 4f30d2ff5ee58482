"""Monte Carlo estimators: reproducibility and concordance with the
analytic routes they exist to verify.

Concordance assertions use fixed seeds and a 4-standard-error band; if a
seed were redrawn the chance of a false alarm is below 1 in 15 000 per
assertion.
"""

import math

import pytest

from shiftstats.distributions import HypergeomParams, hypergeom_tail
from shiftstats.exact_tests import fisher_one_sided
from shiftstats.case_data import builtin_table
from shiftstats.mixture import (
    MixedPoissonModel,
    count_variance,
    expected_count,
    rate_ratio_exceedance,
    tail_probability,
)
from shiftstats.simulation import (
    SimConfig,
    simulate_allocation,
    simulate_mixture_moments,
    simulate_mixture_tail,
    simulate_rate_ratio,
)

GGJ7_MODEL = MixedPoissonModel(rho=1.0, mu=26 / 1734, t=203.0)


def within_band(estimate, analytic, sigmas=4.0):
    return abs(estimate.point - analytic) <= sigmas * estimate.std_error


class TestReproducibility:
    def test_identical_config_identical_estimate(self):
        config = SimConfig(replications=50_000, seed=987654321, model=GGJ7_MODEL)
        first = simulate_mixture_tail(config, 7)
        second = simulate_mixture_tail(config, 7)
        assert first == second

    def test_different_seeds_differ(self):
        a = simulate_mixture_tail(
            SimConfig(replications=50_000, seed=1, model=GGJ7_MODEL), 7
        )
        b = simulate_mixture_tail(
            SimConfig(replications=50_000, seed=2, model=GGJ7_MODEL), 7
        )
        assert a.point != b.point

    def test_allocation_reproducible(self):
        config = SimConfig(
            replications=20_000,
            seed=555,
            model=HypergeomParams(population=100, successes=30, draws=20),
        )
        assert simulate_allocation(config, 8) == simulate_allocation(config, 8)


class TestMixtureTail:
    def test_threshold_zero_is_certain(self):
        est = simulate_mixture_tail(
            SimConfig(replications=10_000, seed=7, model=GGJ7_MODEL), 0
        )
        assert est.point == 1.0
        assert est.std_error == 0.0

    def test_matches_closed_form_geometric(self):
        config = SimConfig(replications=200_000, seed=31337, model=GGJ7_MODEL)
        for n in (1, 7):
            assert within_band(simulate_mixture_tail(config, n), tail_probability(GGJ7_MODEL, n))

    def test_matches_neg_binomial_general_shape(self):
        model = MixedPoissonModel(rho=2.5, mu=0.02, t=150.0)
        config = SimConfig(replications=200_000, seed=424243, model=model)
        for n in (1, 4):
            assert within_band(simulate_mixture_tail(config, n), tail_probability(model, n))

    def test_shape_below_one_sampler(self):
        model = MixedPoissonModel(rho=0.5, mu=0.02, t=150.0)
        config = SimConfig(replications=200_000, seed=99, model=model)
        assert within_band(simulate_mixture_tail(config, 2), tail_probability(model, 2))

    def test_standard_error_formula(self):
        est = simulate_mixture_tail(
            SimConfig(replications=50_000, seed=8, model=GGJ7_MODEL), 7
        )
        assert est.std_error == math.sqrt(est.point * (1.0 - est.point) / 50_000)

    def test_requires_mixture_model(self):
        config = SimConfig(
            replications=10, seed=1, model=HypergeomParams(10, 3, 4)
        )
        with pytest.raises(TypeError):
            simulate_mixture_tail(config, 1)


class TestMixtureMoments:
    def test_mean_and_variance_match_model(self):
        config = SimConfig(replications=1_000_000, seed=20253107, model=GGJ7_MODEL)
        moments = simulate_mixture_moments(config)
        assert abs(moments.mean - expected_count(GGJ7_MODEL)) <= 4.0 * moments.mean_std_error
        assert abs(moments.variance - count_variance(GGJ7_MODEL)) <= 4.0 * moments.variance_std_error

    def test_published_mean_value(self):
        config = SimConfig(replications=1_000_000, seed=20253107, model=GGJ7_MODEL)
        moments = simulate_mixture_moments(config)
        assert abs(moments.mean - 3.04383) <= 4.0 * moments.mean_std_error


class TestRateRatio:
    def test_factor_one_always_happens(self):
        config = SimConfig(replications=20_000, seed=17, model=GGJ7_MODEL)
        est = simulate_rate_ratio(config, 1.0)
        assert est.point == 1.0

    def test_factor_two_matches_two_thirds(self):
        config = SimConfig(replications=200_000, seed=271828, model=GGJ7_MODEL)
        assert within_band(simulate_rate_ratio(config, 2.0), 2.0 / 3.0)

    def test_factor_five_matches_formula(self):
        config = SimConfig(replications=200_000, seed=314159, model=GGJ7_MODEL)
        assert within_band(simulate_rate_ratio(config, 5.0), rate_ratio_exceedance(5.0))

    def test_rejects_non_exponential_intensity(self):
        model = MixedPoissonModel(rho=2.0, mu=0.01, t=100.0)
        config = SimConfig(replications=10, seed=1, model=model)
        with pytest.raises(ValueError, match="rho = 1"):
            simulate_rate_ratio(config, 2.0)


class TestAllocation:
    def test_observed_zero_is_certain(self):
        config = SimConfig(
            replications=10_000, seed=4, model=HypergeomParams(50, 10, 12)
        )
        est = simulate_allocation(config, 0)
        assert est.point == 1.0

    def test_small_urn_matches_analytic(self):
        params = HypergeomParams(population=20, successes=5, draws=6)
        config = SimConfig(replications=200_000, seed=161803, model=params)
        assert within_band(simulate_allocation(config, 3), hypergeom_tail(params, 3))

    def test_jkz_corrected_matches_fisher(self):
        table = builtin_table("jkz-corrected")
        config = SimConfig(
            replications=400_000, seed=662607, model=table.hypergeom_params()
        )
        est = simulate_allocation(config, table.suspect_with)
        assert within_band(est, fisher_one_sided(table))

    def test_requires_hypergeom_params(self):
        config = SimConfig(replications=10, seed=1, model=GGJ7_MODEL)
        with pytest.raises(TypeError):
            simulate_allocation(config, 1)


class TestConfigValidation:
    def test_replications_positive(self):
        with pytest.raises(ValueError):
            SimConfig(replications=0, seed=1, model=GGJ7_MODEL)

    def test_seed_range(self):
        with pytest.raises(ValueError):
            SimConfig(replications=10, seed=-1, model=GGJ7_MODEL)
        with pytest.raises(ValueError):
            SimConfig(replications=10, seed=2**64, model=GGJ7_MODEL)
