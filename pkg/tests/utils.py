"""
Test utilities and helpers for the censored-extremes suite
"""

import math
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import numpy as np

from censored_extremes.models import SurvivalSample

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
LANDMARK_DATASET = DATA_DIR / "landmark_example.csv"


class PerformanceTracker:
    """Track timings of expensive calls (replication runs, quadratures)"""

    def __init__(self):
        self.call_times = []
        self.labels = []
        self.error_count = 0

    def record_call(self, duration: float, label: str = "", error: bool = False):
        """Record a single timed call"""
        self.call_times.append(duration)
        self.labels.append(label)
        if error:
            self.error_count += 1

    def get_stats(self) -> Dict[str, Any]:
        """Get timing statistics"""
        if not self.call_times:
            return {"no_data": True}

        slowest = int(np.argmax(self.call_times))
        return {
            "total_calls": len(self.call_times),
            "avg_time": sum(self.call_times) / len(self.call_times),
            "max_time": max(self.call_times),
            "min_time": min(self.call_times),
            "slowest": self.labels[slowest],
            "error_rate": self.error_count / len(self.call_times),
        }


@contextmanager
def timed_call(tracker: PerformanceTracker, label: str = ""):
    """Context manager to time a call"""
    start_time = time.perf_counter()
    error_occurred = False

    try:
        yield
    except Exception:
        error_occurred = True
        raise
    finally:
        tracker.record_call(time.perf_counter() - start_time, label, error_occurred)


def reference_product_limit(times: Sequence[float], censored: Sequence[bool]) -> float:
    """
    Terminal Kaplan-Meier value by a direct loop over the ordered observations

    Independent of the vectorized estimator: walks the distinct uncensored
    times and sums log(1 − d/r) with the risk set counted by comparison.
    """
    times = np.asarray(times, dtype=float)
    censored = np.asarray(censored, dtype=bool)
    log_value = 0.0
    for t in sorted(set(times[~censored].tolist())):
        at_risk = int(np.count_nonzero(times >= t))
        deaths = int(np.count_nonzero((times == t) & ~censored))
        if deaths == at_risk:
            return 0.0
        log_value += math.log1p(-deaths / at_risk)
    return math.exp(log_value)


def brute_force_stretch(times: Sequence[float], censored: Sequence[bool]):
    """(M − M_u, #censored > M_u) by plain Python, M itself without uncensored data"""
    pairs = list(zip(times, censored))
    largest = max(t for t, _ in pairs)
    uncensored = [t for t, c in pairs if not c]
    if not uncensored:
        return largest, sum(1 for _, c in pairs if c), True
    m_u = max(uncensored)
    return largest - m_u, sum(1 for t, c in pairs if c and t > m_u), False


def random_small_sample(rng: np.random.Generator, max_size: int = 20) -> SurvivalSample:
    """Small sample on an integer grid so that ties occur"""
    size = int(rng.integers(1, max_size + 1))
    return SurvivalSample(
        times=rng.integers(0, 15, size=size).astype(float),
        censored=rng.random(size) < 0.5,
    )


def write_dataset(path: Path, times: Sequence[float], censored: Sequence[bool]) -> Path:
    """Write a time,censored dataset as read by the kme and test-cure commands"""
    lines = ["time,censored"]
    lines += [f"{t!r},{int(bool(c))}" for t, c in zip(times, censored)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestConfigManager:
    """Manage test configuration and cached results"""

    __test__ = False

    def __init__(self):
        self.config = {"skip_slow_tests": False}
        self._cached_data = {}

    def set_config(self, key: str, value):
        """Set configuration value"""
        self.config[key] = value

    def cache_test_data(self, key: str, data: Any):
        """Cache an expensive result (e.g. a replication run) for the session"""
        self._cached_data[key] = data

    def get_cached_data(self, key: str) -> Optional[Any]:
        """Get cached test data, or None"""
        return self._cached_data.get(key)

    def should_skip_slow_tests(self) -> bool:
        """Check if slow tests should be skipped"""
        return self.config.get("skip_slow_tests", False)


# Global test configuration instance
test_config = TestConfigManager()
