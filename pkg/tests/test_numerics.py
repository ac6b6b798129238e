"""
Quadrature, root finding, normal tail helpers, random streams and
environment defaults
"""

import logging
import math

import numpy as np
import pytest

from censored_extremes.config import default_log_level, default_threads
from censored_extremes.errors import BracketError, ConfigError, QuadratureError
from censored_extremes.numerics import (
    MAX_SEED,
    bracket_upward,
    integrate,
    integrate_half_line,
    log_norm_sf,
    mills_ratio,
    norm_isf_from_log,
    solve_decreasing,
    stream_rng,
)
from censored_extremes.utils import setup_logging
from censored_extremes.utils.trends import (
    count_increases,
    is_non_increasing,
    is_strictly_increasing,
)


class TestQuadrature:
    """QUADPACK wrapper"""

    @pytest.mark.numerics
    def test_finite_interval(self):
        result = integrate(lambda x: x * x, 0.0, 3.0, "x^2")
        assert result.value == pytest.approx(9.0, rel=1e-12)
        assert result.abserr < 1e-8

    @pytest.mark.numerics
    def test_half_line(self):
        result = integrate_half_line(lambda x: math.exp(-2.0 * x), 1.0, "exp tail")
        assert result.value == pytest.approx(math.exp(-2.0) / 2.0, rel=1e-10)

    @pytest.mark.numerics
    def test_whole_line(self):
        density = lambda x: math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)
        result = integrate_half_line(density, -math.inf, "normal density")
        assert result.value == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.numerics
    def test_non_finite_value_raises(self):
        with pytest.raises(QuadratureError):
            integrate(lambda x: math.inf, 0.0, 1.0, "infinite integrand")


class TestRoots:
    """Upward bracketing and bisection"""

    @pytest.mark.numerics
    def test_bracket_and_solve(self):
        func = lambda x: 10.0 - x
        hi = bracket_upward(func, 0.0, "x = 10")
        assert func(hi) < 0
        assert solve_decreasing(func, 0.0, hi, "x = 10") == pytest.approx(10.0, abs=1e-10)

    @pytest.mark.numerics
    def test_root_at_lower_end(self):
        assert solve_decreasing(lambda x: -x, 0.0, 1.0, "origin") == 0.0

    @pytest.mark.numerics
    def test_unbracketable(self):
        with pytest.raises(BracketError):
            bracket_upward(lambda x: 1.0, 0.0, "positive constant")

    @pytest.mark.numerics
    def test_wrong_signs(self):
        with pytest.raises(BracketError):
            solve_decreasing(lambda x: 1.0 + x, 0.0, 1.0, "no sign change")


class TestNormalTail:
    """Far-tail normal helpers"""

    @pytest.mark.unit
    def test_mills_ratio_at_zero(self):
        assert mills_ratio(0.0) == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-14)

    @pytest.mark.unit
    def test_mills_ratio_asymptotics(self):
        z = 1e4
        assert mills_ratio(z) == pytest.approx(1.0 / z, rel=1e-7)

    @pytest.mark.unit
    def test_inverse_of_log_tail(self):
        for log_q in (math.log(0.5), -10.0, -700.0, -5000.0):
            z = norm_isf_from_log(log_q)
            assert log_norm_sf(z) == pytest.approx(log_q, rel=1e-8)


class TestStreams:
    """Counter-based random streams"""

    @pytest.mark.unit
    def test_same_key_same_draws(self):
        np.testing.assert_array_equal(
            stream_rng(42, 3).random(10), stream_rng(42, 3).random(10)
        )

    @pytest.mark.unit
    def test_different_index_differs(self):
        assert not np.array_equal(stream_rng(42, 0).random(10), stream_rng(42, 1).random(10))

    @pytest.mark.unit
    def test_seed_range(self):
        stream_rng(MAX_SEED, 0)
        with pytest.raises(ValueError):
            stream_rng(MAX_SEED + 1, 0)
        with pytest.raises(ValueError):
            stream_rng(-1, 0)


class TestTrends:
    """Monotone-trend helpers"""

    @pytest.mark.unit
    def test_non_increasing_with_slack(self):
        assert is_non_increasing([3.0, 2.0, 2.0, 1.0])
        assert not is_non_increasing([3.0, 2.0, 2.5])
        assert is_non_increasing([1.0, 1.0 + 1e-12], slack=1e-9)

    @pytest.mark.unit
    def test_strictly_increasing(self):
        assert is_strictly_increasing([0.1, 0.5, 0.9])
        assert not is_strictly_increasing([0.1, 0.1, 0.9])

    @pytest.mark.unit
    def test_count_increases(self):
        assert count_increases([5.0, 4.0, 4.5, 3.0, 3.2]) == 2
        assert count_increases([]) == 0


class TestEnvironmentDefaults:
    """CENSEX_THREADS and CENSEX_LOG_LEVEL"""

    @pytest.mark.unit
    def test_threads_default(self):
        assert default_threads({}) == 1
        assert default_threads({"CENSEX_THREADS": ""}) == 1
        assert default_threads({"CENSEX_THREADS": "4"}) == 4

    @pytest.mark.unit
    @pytest.mark.parametrize("raw", ["0", "-2", "many"])
    def test_threads_invalid(self, raw):
        with pytest.raises(ConfigError) as info:
            default_threads({"CENSEX_THREADS": raw})
        assert info.value.key == "CENSEX_THREADS"

    @pytest.mark.unit
    def test_log_level(self):
        assert default_log_level({}) == "WARNING"
        assert default_log_level({"CENSEX_LOG_LEVEL": "info"}) == "INFO"
        with pytest.raises(ConfigError):
            default_log_level({"CENSEX_LOG_LEVEL": "loud"})


class TestLoggingSetup:
    """Package logger handlers"""

    @pytest.mark.unit
    def test_repeated_setup_closes_file_handler(self, tmp_path):
        first = setup_logging("INFO", log_file=tmp_path / "first.log")
        (old_file,) = [h for h in first.handlers if isinstance(h, logging.FileHandler)]
        try:
            logger = setup_logging("DEBUG", log_file=tmp_path / "second.log")
            assert old_file.stream is None
            assert old_file not in logger.handlers
            assert len(logger.handlers) == 2
            assert logger.level == logging.DEBUG
        finally:
            setup_logging("WARNING")

    @pytest.mark.unit
    def test_stream_only(self):
        logger = setup_logging("WARNING")
        assert len(logger.handlers) == 1
        assert not isinstance(logger.handlers[0], logging.FileHandler)
