"""
Norming constants, limit laws, the Gumbel-pair oracle and the tail-asymptotic
checks
"""

import math

import numpy as np
import pytest

from censored_extremes.distributions import (
    CensoringSetup,
    Exponential,
    LogNormal,
    NormalTail,
    Weibull,
)
from censored_extremes.errors import BracketError, DomainError
from censored_extremes.limits import (
    LimitLaw,
    check_auxiliary_derivative_decay,
    check_converse,
    check_r_law,
    check_regular_variation_U,
    check_tail_asymptotics,
    check_von_mises_representation,
    count_law_pmf,
    count_law_tail,
    gumbel_marginal_cdf,
    l_law_cdf,
    l_law_quantile,
    l_law_tail,
    norming_constants,
    oracle_estimates,
    poisson_mixture_pmf,
    r_law_tail,
    r_ratio_tail,
    r_ratio_tail_at_zero,
    success_prob,
    tail_level_grid,
)
from censored_extremes.models import LawKind
from censored_extremes.numerics import stream_rng

REPRESENTATION_FAMILIES = [
    Exponential(rate=1.5),
    Weibull(shape=2.0, scale=1.0),
    Weibull(shape=0.5, scale=2.0),
    LogNormal(sigma=1.0),
    NormalTail(sigma=1.0),
]


class TestNorming:
    """b_n and a_n"""

    @pytest.mark.numerics
    @pytest.mark.parametrize("n", [100, 10_000, 1_000_000])
    def test_exponential_pair(self, exp_setup, n):
        norming = norming_constants(exp_setup, n)
        assert norming.b_n == pytest.approx(math.log(n) / 2.0, rel=1e-10)
        assert norming.a_n == pytest.approx(0.5, rel=1e-10)

    @pytest.mark.numerics
    @pytest.mark.parametrize("n", [100, 10_000, 1_000_000])
    def test_weibull_pair(self, n):
        setup = CensoringSetup(
            lifetime="weibull(shape=2,scale=1)", censoring="weibull(shape=2,scale=1)"
        )
        norming = norming_constants(setup, n)
        b_n = math.sqrt(math.log(n) / 2.0)
        assert norming.b_n == pytest.approx(b_n, rel=1e-10)
        assert norming.a_n == pytest.approx(1.0 / (4.0 * b_n), rel=1e-10)

    @pytest.mark.numerics
    def test_defining_equation(self, weibull_kappa0_setup):
        norming = norming_constants(weibull_kappa0_setup, 5000)
        h_bar = weibull_kappa0_setup.lifetime.tail(norming.b_n) * (
            weibull_kappa0_setup.censoring.tail(norming.b_n)
        )
        assert 5000 * h_bar == pytest.approx(1.0, rel=1e-9)

    @pytest.mark.unit
    def test_small_n_rejected(self, exp_setup):
        with pytest.raises(DomainError):
            norming_constants(exp_setup, 1)

    @pytest.mark.unit
    def test_cure_fraction_rejected(self):
        setup = CensoringSetup(
            lifetime="exp(rate=1)", censoring="exp(rate=1)", cure_fraction=0.8
        )
        with pytest.raises(DomainError):
            norming_constants(setup, 100)

    @pytest.mark.numerics
    def test_target_below_representation_start(self):
        setup = CensoringSetup(
            lifetime="weibull(shape=2,scale=10)", censoring="weibull(shape=2,scale=10)"
        )
        with pytest.raises(BracketError):
            norming_constants(setup, 2)

    @pytest.mark.numerics
    def test_tail_level_grid(self, exp_setup):
        grid = tail_level_grid(exp_setup)
        expected = [-math.log(level) / 2.0 for level in (1e-2, 1e-4, 1e-6, 1e-8)]
        assert grid == pytest.approx(expected, rel=1e-10)


class TestLevelStretchLaw:
    """L-law: atom 1/(1+κ) at zero, cdf 1/(1 + κe^{−x})"""

    @pytest.mark.unit
    @pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
    def test_atom(self, kappa):
        assert l_law_cdf(kappa, 0.0) == pytest.approx(1.0 / (1.0 + kappa))

    @pytest.mark.unit
    def test_cdf_and_tail_complement(self):
        x = np.linspace(0.0, 10.0, 21)
        np.testing.assert_allclose(l_law_cdf(2.0, x) + l_law_tail(2.0, x), 1.0, rtol=1e-14)

    @pytest.mark.unit
    def test_kappa_zero_is_degenerate(self):
        assert l_law_cdf(0.0, 0.0) == 1.0
        assert l_law_quantile(0.0, 0.99) == 0.0

    @pytest.mark.unit
    def test_quantile(self):
        assert l_law_quantile(1.0, 0.3) == 0.0
        assert l_law_quantile(1.0, 0.8) == pytest.approx(math.log(4.0))
        assert l_law_cdf(1.0, l_law_quantile(1.0, 0.8)) == pytest.approx(0.8)

    @pytest.mark.unit
    def test_domain(self):
        with pytest.raises(DomainError):
            l_law_cdf(1.0, -0.5)
        with pytest.raises(DomainError):
            LimitLaw.l_law(math.inf)
        with pytest.raises(DomainError):
            l_law_cdf(-1.0, 1.0)

    @pytest.mark.unit
    def test_mean(self):
        assert LimitLaw.l_law(2.0).mean == pytest.approx(math.log(3.0))

    @pytest.mark.simulation
    def test_sample_atom(self, rng):
        draws = LimitLaw.l_law(2.0).sample(rng, 100_000)
        assert np.mean(draws == 0.0) == pytest.approx(1.0 / 3.0, abs=0.006)


class TestRatioLaw:
    """Closed-form ratio law and the literal ratio event"""

    @pytest.mark.numerics
    @pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
    def test_limit_at_zero(self, kappa):
        assert r_law_tail(kappa, 1e-6) == pytest.approx(kappa / (1.0 + kappa), abs=1e-3)

    @pytest.mark.numerics
    @pytest.mark.parametrize("kappa", [0.5, 1.0, 2.0])
    def test_limit_at_one(self, kappa):
        assert r_law_tail(kappa, 1.0 - 1e-4) == pytest.approx(
            math.exp(-1.0 / (1.0 + kappa)), abs=1e-3
        )

    @pytest.mark.numerics
    def test_vectorized_evaluation(self):
        values = r_law_tail(1.0, [0.2, 0.5])
        assert values.shape == (2,)
        assert values[0] == pytest.approx(r_law_tail(1.0, 0.2))

    @pytest.mark.unit
    def test_domain(self):
        for x in (0.0, 1.0, 1.5):
            with pytest.raises(DomainError):
                r_law_tail(1.0, x)
        with pytest.raises(DomainError):
            r_law_tail(0.0, 0.5)
        with pytest.raises(DomainError):
            LimitLaw.r_law(1.0).quantile(0.9)

    @pytest.mark.numerics
    def test_ratio_event_decreasing(self):
        grid = [0.05, 0.1, 0.5, 1.0, 2.0, 5.0]
        values = r_ratio_tail(1.0, grid)
        assert np.all(np.diff(values) < 0)
        assert values[-1] < r_ratio_tail_at_zero(1.0) / 2.0

    @pytest.mark.numerics
    def test_ratio_event_at_zero(self):
        assert r_ratio_tail(2.0, 1e-9) == pytest.approx(r_ratio_tail_at_zero(2.0), abs=1e-6)
        assert r_ratio_tail_at_zero(2.0) == pytest.approx((2.0 / 3.0) * (1.0 - math.exp(-1.0)))

    @pytest.mark.numerics
    def test_ratio_event_quantile(self):
        law = LimitLaw.r_ratio_law(2.0)
        c = law.quantile(0.9)
        assert c > 0
        assert law.tail(c) == pytest.approx(0.1, abs=1e-8)

    @pytest.mark.numerics
    def test_ratio_event_quantile_inside_atom(self):
        # P[R > 0] < 0.5 for κ = 1, so the median is 0
        assert LimitLaw.r_ratio_law(1.0).quantile(0.5) == 0.0


class TestCountLaws:
    """Geometric law of N_c(>M_u) and its Poisson-mixture form"""

    @pytest.mark.unit
    @pytest.mark.parametrize("kappa", [0.25, 1.0, 4.0])
    def test_pmf_sums_to_one(self, kappa):
        assert count_law_pmf(kappa, np.arange(400)).sum() == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.unit
    def test_tail(self):
        assert count_law_tail(1.0, 3) == pytest.approx(0.125)
        assert count_law_tail(2.0, 0) == 1.0

    @pytest.mark.unit
    def test_integer_support(self):
        with pytest.raises(DomainError):
            count_law_pmf(1.0, -1)
        with pytest.raises(DomainError):
            count_law_pmf(1.0, 1.5)

    @pytest.mark.numerics
    @pytest.mark.parametrize("kappa", [0.25, 1.0, 4.0])
    def test_poisson_mixture_equals_geometric(self, kappa):
        j = np.arange(11)
        np.testing.assert_allclose(
            poisson_mixture_pmf(kappa, j), count_law_pmf(kappa, j), atol=1e-8, rtol=0
        )

    @pytest.mark.unit
    def test_geometric_cdf_and_quantile(self):
        law = LimitLaw.geometric(1.0)
        assert law.cdf(2.5) == pytest.approx(0.875)
        assert law.cdf(-1.0) == 0.0
        assert law.quantile(0.5) == 0.0
        assert law.quantile(0.75) == 1.0
        assert law.mean == 1.0

    @pytest.mark.simulation
    def test_geometric_sample_mean(self, rng):
        draws = LimitLaw.geometric(2.0).sample(rng, 100_000)
        assert draws.min() >= 0
        assert draws.mean() == pytest.approx(2.0, abs=0.03)


class TestGumbelMarginal:
    """Λ^t marginals of the extremal process"""

    @pytest.mark.unit
    def test_cdf(self):
        assert gumbel_marginal_cdf(1.0, 0.0) == pytest.approx(math.exp(-1.0))
        assert gumbel_marginal_cdf(0.5, math.log(0.5)) == pytest.approx(math.exp(-1.0))

    @pytest.mark.unit
    def test_quantile_and_mean(self):
        law = LimitLaw.gumbel_marginal(2.0)
        assert law.cdf(law.quantile(0.3)) == pytest.approx(0.3)
        assert law.mean == pytest.approx(math.log(2.0) + np.euler_gamma)

    @pytest.mark.unit
    def test_time_must_be_positive(self):
        with pytest.raises(DomainError):
            LimitLaw.gumbel_marginal(0.0)
        with pytest.raises(DomainError):
            gumbel_marginal_cdf(math.inf, 0.0)

    @pytest.mark.unit
    def test_evaluate_dispatch(self):
        assert LimitLaw.l_law(1.0).evaluate(0.0) == pytest.approx(0.5)
        assert LimitLaw.geometric(1.0).evaluate(0) == pytest.approx(0.5)
        assert LimitLaw(kind=LawKind.GUMBEL_MARGINAL, t=1.0).evaluate(0.0) == pytest.approx(
            math.exp(-1.0)
        )


class TestOracle:
    """Gumbel-pair Monte Carlo oracle"""

    @pytest.mark.simulation
    def test_events_match_closed_forms(self):
        x = [0.2, 0.5, 0.8]
        estimate = oracle_estimates(1.0, x, 400_000, stream_rng(11, 0))
        np.testing.assert_allclose(estimate.integral, r_law_tail(1.0, x), atol=0.006)
        np.testing.assert_allclose(estimate.ratio, r_ratio_tail(1.0, x), atol=0.006)

    @pytest.mark.simulation
    def test_stretch_event_follows_l_law(self):
        x = [0.5, 1.0, 2.0]
        estimate = oracle_estimates(2.0, x, 400_000, stream_rng(12, 0))
        np.testing.assert_allclose(estimate.stretch_cdf, l_law_cdf(2.0, x), atol=0.006)

    @pytest.mark.simulation
    def test_check_r_law_small(self):
        report = check_r_law(
            kappa_values=(1.0,), x_values=(0.2, 0.5, 0.8), draws=400_000, seed=3,
            tolerance=0.006,
        )
        assert report.passed
        assert len(report.rows) == 3
        # the closed form integrates Y_u < (1 − x)·Y_c, not the literal ratio event
        assert report.systematic_gap

    @pytest.mark.unit
    def test_oracle_needs_positive_kappa(self):
        with pytest.raises(DomainError):
            oracle_estimates(0.0, [0.5], 10, stream_rng(0, 0))


class TestTailAsymptotics:
    """Conditional tails of censored and uncensored lifetimes"""

    @pytest.mark.numerics
    @pytest.mark.parametrize("rates", [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)])
    def test_exponential_ratios_are_exact(self, rates):
        setup = CensoringSetup(
            lifetime=f"exp(rate={rates[0]})", censoring=f"exp(rate={rates[1]})"
        )
        report = check_tail_asymptotics(setup)
        assert max(report.discrepancies) <= 1e-9
        assert max(report.censored_discrepancies) <= 1e-9
        assert report.complement_error <= 1e-8
        assert report.uncensored_target == pytest.approx(1.0 / (1.0 + setup.kappa))

    @pytest.mark.numerics
    def test_lognormal_complement(self):
        setup = CensoringSetup(lifetime="lognormal(sigma=1)", censoring="lognormal(sigma=1)")
        assert check_tail_asymptotics(setup).complement_error <= 1e-8

    @pytest.mark.numerics
    def test_kappa_zero_censored_ratio_decreases(self, weibull_kappa0_setup):
        report = check_tail_asymptotics(weibull_kappa0_setup)
        assert report.censored_target == 0.0
        assert report.censored_monotone_trend
        assert report.censored_ratio[-1] < report.censored_ratio[0]
        assert report.uncensored_ratio[-1] > report.uncensored_ratio[0]

    @pytest.mark.numerics
    def test_custom_grid_must_increase(self, exp_setup):
        with pytest.raises(DomainError):
            check_tail_asymptotics(exp_setup, x_grid=[2.0, 1.0])

    @pytest.mark.numerics
    def test_infinite_kappa_rejected(self):
        setup = CensoringSetup(lifetime="lognormal(sigma=1)", censoring="exp(rate=1)")
        with pytest.raises(DomainError):
            check_tail_asymptotics(setup)

    @pytest.mark.numerics
    def test_converse_recovers_auxiliary_ratio(self, exp_kappa2_setup):
        report = check_converse(exp_kappa2_setup)
        assert report.final_discrepancy <= 1e-6
        assert report.implied_ratio[-1] == pytest.approx(2.0, abs=1e-6)

    @pytest.mark.numerics
    def test_converse_needs_positive_kappa(self, weibull_kappa0_setup):
        with pytest.raises(DomainError):
            check_converse(weibull_kappa0_setup)

    @pytest.mark.numerics
    def test_success_prob_closed_form(self, exp_setup):
        assert success_prob(exp_setup, math.log(2.0)) == pytest.approx(0.25)

    @pytest.mark.numerics
    def test_success_prob_by_quadrature(self, weibull_kappa0_setup):
        assert success_prob(weibull_kappa0_setup, 0.0) == pytest.approx(1.0, abs=1e-8)
        values = success_prob(weibull_kappa0_setup, np.array([0.5, 1.0, 2.0]))
        assert np.all(np.diff(values) < 0)

    @pytest.mark.numerics
    def test_success_prob_identical_laws(self):
        setup = CensoringSetup(lifetime="lognormal(sigma=1)", censoring="lognormal(sigma=1)")
        assert success_prob(setup, 1.0) == pytest.approx(0.25, rel=1e-12)


class TestRegularVariation:
    """U(tx)/U(t) → x^κ and the dominant tail"""

    @pytest.mark.numerics
    def test_exponential_pair_is_exact(self, exp_kappa2_setup):
        report = check_regular_variation_U(exp_kappa2_setup)
        assert max(report.discrepancies) <= 1e-9
        assert report.target == pytest.approx(4.0)
        assert report.tail_ratio_trend == "increasing"
        assert report.expected_dominance == "lifetime"

    @pytest.mark.numerics
    def test_lighter_lifetime_rate(self):
        setup = CensoringSetup(lifetime="exp(rate=2)", censoring="exp(rate=1)")
        report = check_regular_variation_U(setup)
        assert report.tail_ratio_trend == "decreasing"
        assert report.expected_dominance == "censoring"

    @pytest.mark.numerics
    def test_balanced_pair(self, exp_setup):
        report = check_regular_variation_U(exp_setup)
        assert report.tail_ratio_trend == "flat"
        assert report.expected_dominance == "balanced"

    @pytest.mark.numerics
    def test_kappa_zero_converges_slowly(self, weibull_kappa0_setup):
        report = check_regular_variation_U(weibull_kappa0_setup)
        assert report.target == 1.0
        assert report.monotone_trend
        assert report.discrepancies[-1] < report.discrepancies[0]

    @pytest.mark.unit
    def test_grid_must_exceed_one(self, exp_setup):
        with pytest.raises(DomainError):
            check_regular_variation_U(exp_setup, t_grid=[0.5, 10.0])


class TestVonMises:
    """Auxiliary functions and the von Mises representation"""

    @pytest.mark.numerics
    @pytest.mark.parametrize("model", REPRESENTATION_FAMILIES, ids=lambda m: m.label())
    def test_representation(self, model):
        report = check_von_mises_representation(model)
        assert len(report.grid) == 10
        assert report.max_relative_error <= 1e-8

    @pytest.mark.unit
    def test_representation_points_above_x0(self):
        with pytest.raises(DomainError):
            check_von_mises_representation(Weibull(shape=2.0, scale=1.0), x_grid=[0.5, 2.0])

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "model",
        [Exponential(rate=1.0), Weibull(shape=2.0, scale=1.0), NormalTail(sigma=1.0)],
        ids=lambda m: m.label(),
    )
    def test_auxiliary_derivative_decays(self, model):
        report = check_auxiliary_derivative_decay(model)
        assert len(report.grid) == 20
        assert report.monotone_trend
        assert report.discrepancies[-1] <= report.discrepancies[0]

    @pytest.mark.unit
    def test_lognormal_auxiliary_derivative_decays(self):
        report = check_auxiliary_derivative_decay(LogNormal(sigma=1.0))
        assert report.discrepancies[-1] < 0.3 * report.discrepancies[0]
