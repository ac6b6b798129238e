"""
Acceptance experiments at full size: the verification presets
"""

import pytest

from censored_extremes.analysis import (
    check_np_limit,
    estimate_kappa,
    fit_count_law,
    ks_against_gumbel_marginal,
    ks_against_l_law,
)
from censored_extremes.limits import check_r_law
from censored_extremes.verification import run_preset
from tests.utils import PerformanceTracker, timed_call


@pytest.fixture(scope="module")
def tracker():
    return PerformanceTracker()


class TestExpKappaOne:
    """Exp(1)/Exp(1) at n = 10^4 with 5000 replications"""

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_atom_of_stretch_law(self, exp_kappa1_run):
        assert exp_kappa1_run.fraction_no_stretch() == pytest.approx(0.5, abs=0.025)

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_stretch_law_shape(self, exp_kappa1_run):
        report = ks_against_l_law(exp_kappa1_run, threshold=0.05)
        assert report.passed, report

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_count_law(self, exp_kappa1_run):
        report = fit_count_law(exp_kappa1_run, threshold=0.05)
        assert report.passed, report
        assert report.details["empirical_p0"] == pytest.approx(0.5, abs=0.03)

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_np_limit(self, exp_kappa1_run):
        report = check_np_limit(exp_kappa1_run, threshold=0.05)
        assert report.passed, report

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_kappa_estimate(self, exp_kappa1_run):
        assert estimate_kappa(exp_kappa1_run) == pytest.approx(1.0, abs=0.1)

    @pytest.mark.slow
    @pytest.mark.acceptance
    @pytest.mark.parametrize("which", ["M", "M_u", "M_c"])
    def test_gumbel_marginals(self, exp_kappa1_run, which):
        report = ks_against_gumbel_marginal(exp_kappa1_run, which)
        assert report.passed, report


class TestPresets:
    """Named presets through the verification runner"""

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_identities(self, tracker):
        with timed_call(tracker, "identities"):
            summary = run_preset("identities")
        assert summary.passed, summary.failed()
        assert len(summary.reports) == 6

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_exp_kappa2(self, tracker):
        with timed_call(tracker, "exp-kappa2"):
            summary = run_preset("exp-kappa2")
        assert summary.passed, summary.failed()

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_weibull_kappa0(self, tracker):
        with timed_call(tracker, "weibull-kappa0"):
            summary = run_preset("weibull-kappa0")
        assert summary.passed, summary.failed()

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_r_law_fast(self, tracker):
        with timed_call(tracker, "r-law"):
            report = check_r_law(draws=1_000_000, seed=0, tolerance=0.004)
        assert report.passed
        assert len(report.rows) == 27
        assert report.systematic_gap

    @pytest.mark.slow
    @pytest.mark.acceptance
    def test_draws_override(self):
        summary = run_preset("r-law", overrides={"draws": 200_000, "r_law": 0.01})
        (report,) = summary.reports
        assert report.sample_size == 200_000
        assert report.threshold == 0.01

    @pytest.mark.acceptance
    def test_timings_recorded(self, tracker):
        stats = tracker.get_stats()
        if stats.get("no_data"):
            pytest.skip("No preset ran in this session")
        assert stats["error_rate"] == 0.0
