"""
Pytest configuration and fixtures for the censored-extremes suite
"""

import logging

import numpy as np
import pytest

from censored_extremes.distributions import CensoringSetup
from censored_extremes.models import PRESETS
from censored_extremes.server import create_server
from censored_extremes.simulation import run_replications
from tests.utils import LANDMARK_DATASET, test_config, write_dataset


@pytest.fixture
def mcp_server():
    """Create MCP server instance for testing"""
    return create_server()


@pytest.fixture
def exp_setup():
    """Exp(1)/Exp(1): κ = 1, p_u = p_c = 1/2"""
    return CensoringSetup(lifetime="exp(rate=1)", censoring="exp(rate=1)")


@pytest.fixture
def exp_kappa2_setup():
    """Exp(1)/Exp(2): κ = 2, p_u = 1/3"""
    return CensoringSetup(lifetime="exp(rate=1)", censoring="exp(rate=2)")


@pytest.fixture
def weibull_kappa0_setup():
    """Weibull(2,1)/Weibull(1,1): lighter lifetime tail, κ = 0"""
    return CensoringSetup(
        lifetime="weibull(shape=2,scale=1)", censoring="weibull(shape=1,scale=1)"
    )


@pytest.fixture
def rng():
    """Fresh generator with a fixed seed for each test"""
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def small_exp_run():
    """Normalized Exp(1)/Exp(1) run small enough for unit-speed tests"""
    setup = CensoringSetup(lifetime="exp(rate=1)", censoring="exp(rate=1)")
    return run_replications(setup, 500, 300, master_seed=7)


@pytest.fixture(scope="session")
def exp_kappa1_run():
    """The exp-kappa1 preset run: n = 10^4, 5000 replications, seed 42"""
    cached = test_config.get_cached_data("exp-kappa1")
    if cached is not None:
        return cached
    preset = PRESETS["exp-kappa1"]
    setup = CensoringSetup(lifetime=preset.lifetime, censoring=preset.censoring)
    result = run_replications(setup, preset.n_values[0], preset.reps, preset.seed)
    test_config.cache_test_data("exp-kappa1", result)
    return result


@pytest.fixture
def landmark_path():
    """Bundled dataset with M_u = 23, M = 35 and five censored times above M_u"""
    return LANDMARK_DATASET


@pytest.fixture
def dataset_writer(tmp_path):
    """Write a time,censored CSV under tmp_path and return its path"""
    counter = {"n": 0}

    def write(times, censored, name=None):
        counter["n"] += 1
        return write_dataset(tmp_path / (name or f"dataset_{counter['n']}.csv"), times, censored)

    return write


@pytest.fixture(autouse=True)
def _quiet_package_logger():
    """Keep handlers installed by CLI tests from leaking between tests"""
    yield
    logger = logging.getLogger("censored_extremes")
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


def pytest_collection_modifyitems(config, items):
    """Honour the skip_slow_tests switch of the shared test configuration"""
    if not test_config.should_skip_slow_tests():
        return
    skip_slow = pytest.mark.skip(reason="Slow tests disabled")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
