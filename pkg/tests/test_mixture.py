"""Mixed-Poisson model: closed forms against the published values, the
quadrature oracle, and the variance decomposition."""

import math
import random

import pytest

from shiftstats.case_data import builtin_scenario
from shiftstats.mixture import (
    MixedPoissonModel,
    TailCurve,
    count_variance,
    expected_count,
    rate_ratio_exceedance,
    tail_curve,
    tail_probability,
    tail_probability_quadrature,
    variance_components,
)

GGJ7_MODEL = MixedPoissonModel(rho=1.0, mu=26 / 1734, t=203.0)
GGJ13_MODEL = MixedPoissonModel(rho=1.0, mu=30 / 1734, t=203.0)


class TestExpectedCount:
    def test_published_value(self):
        assert abs(expected_count(GGJ7_MODEL) - 3.04383) <= 1e-5

    def test_mean_is_mu_regardless_of_shape(self):
        assert expected_count(MixedPoissonModel(rho=5.0, mu=1.0, t=1.0)) == 1.0

    def test_unfavorable_scenario(self):
        assert math.isclose(
            expected_count(GGJ13_MODEL), 203 * 30 / 1734, rel_tol=1e-15
        )

    def test_from_scenario_divides_once(self):
        model = MixedPoissonModel.from_scenario(builtin_scenario("GGJ7"))
        assert model.mu == 26 / 1734
        assert model.t == 203.0
        assert model.rho == 1.0


class TestTailProbability:
    def test_headline_value(self):
        assert abs(tail_probability(GGJ7_MODEL, 7) - 0.13690) <= 5e-6

    def test_unfavorable_value(self):
        assert abs(tail_probability(GGJ13_MODEL, 13) - 0.03850) <= 5e-5

    def test_zero_threshold(self):
        assert tail_probability(GGJ7_MODEL, 0) == 1.0
        assert tail_probability(MixedPoissonModel(2.0, 0.3, 11.0), 0) == 1.0

    def test_first_bar(self):
        assert abs(tail_probability(GGJ7_MODEL, 1) - 0.75270964061608) <= 1e-10

    def test_geometric_identity(self):
        base = tail_probability(GGJ7_MODEL, 1)
        for n in range(1, 30):
            assert math.isclose(
                tail_probability(GGJ7_MODEL, n), base**n, rel_tol=1e-12
            )

    def test_general_shape_via_neg_binomial(self):
        # rho != 1 must agree with the independent quadrature route
        model = MixedPoissonModel(rho=2.0, mu=0.01, t=100.0)
        for n in (0, 1, 3, 8):
            assert abs(
                tail_probability(model, n) - tail_probability_quadrature(model, n)
            ) <= 1e-8

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            tail_probability(GGJ7_MODEL, -1)


class TestTailCurve:
    def test_first_two_bars(self):
        curve = tail_curve(GGJ7_MODEL, 2)
        assert abs(curve.probabilities[0] - 0.75270964061608) <= 1e-10
        assert abs(curve.probabilities[1] - 0.56657180307639) <= 1e-10

    def test_last_bar_of_fourteen(self):
        curve = tail_curve(GGJ7_MODEL, 14)
        assert abs(curve.probabilities[-1] - 0.01874065209741) <= 1e-10

    def test_saturates_for_large_mean(self):
        curve = tail_curve(MixedPoissonModel(rho=1.0, mu=1e6, t=1.0), 1)
        assert curve.probabilities[0] > 0.999999

    def test_strictly_decreasing(self):
        curve = tail_curve(GGJ7_MODEL, 40)
        assert all(b < a for a, b in zip(curve.probabilities, curve.probabilities[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            TailCurve(k_values=(1, 2), probabilities=(0.5,))
        with pytest.raises(ValueError):
            TailCurve(k_values=(1, 2), probabilities=(0.5, 0.5))
        with pytest.raises(ValueError):
            TailCurve(k_values=(1,), probabilities=(0.0,))
        with pytest.raises(ValueError):
            tail_curve(GGJ7_MODEL, 0)


class TestVariance:
    def test_published_model(self):
        tmu = 203 * 26 / 1734
        assert abs(count_variance(GGJ7_MODEL) - (tmu + tmu * tmu)) <= 1e-10
        assert abs(count_variance(GGJ7_MODEL) - 12.3087) <= 5e-4

    def test_unit_mean(self):
        # t*mu = 1 at rho 1: variance 1 + 1
        model = MixedPoissonModel(rho=1.0, mu=0.5, t=2.0)
        assert math.isclose(count_variance(model), 2.0, rel_tol=1e-15)

    def test_mixing_component_vanishes_as_shape_grows(self):
        previous = math.inf
        for rho in (1.0, 10.0, 1e3, 1e6, 1e9):
            comp = variance_components(MixedPoissonModel(rho=rho, mu=26 / 1734, t=203.0))
            assert comp.variance_of_conditional_mean < previous
            previous = comp.variance_of_conditional_mean
        assert previous <= 1e-8

    def test_components_sum(self):
        rng = random.Random(31)
        for _ in range(50):
            model = MixedPoissonModel(
                rho=rng.uniform(0.1, 50.0),
                mu=rng.uniform(1e-4, 2.0),
                t=rng.uniform(1.0, 500.0),
            )
            comp = variance_components(model)
            assert math.isclose(
                comp.expected_conditional_variance + comp.variance_of_conditional_mean,
                count_variance(model),
                rel_tol=1e-14,
            )

    def test_overdispersion_random_models(self):
        rng = random.Random(32)
        for _ in range(100):
            model = MixedPoissonModel(
                rho=rng.uniform(0.05, 100.0),
                mu=rng.uniform(1e-5, 5.0),
                t=rng.uniform(0.1, 1000.0),
            )
            assert count_variance(model) > expected_count(model)


class TestRateRatio:
    def test_factor_two(self):
        assert rate_ratio_exceedance(2.0) == 2.0 / 3.0

    def test_factor_one_certain(self):
        assert rate_ratio_exceedance(1.0) == 1.0

    def test_factor_three(self):
        assert rate_ratio_exceedance(3.0) == 0.5

    def test_domain_error(self):
        with pytest.raises(ValueError):
            rate_ratio_exceedance(0.8)


class TestQuadratureOracle:
    def test_closed_form_matches_integral(self):
        for n in range(1, 21):
            closed = tail_probability(GGJ7_MODEL, n)
            integral = tail_probability_quadrature(GGJ7_MODEL, n)
            assert abs(closed - integral) <= 1e-8

    def test_trivial_threshold(self):
        assert tail_probability_quadrature(GGJ7_MODEL, 0) == 1.0
