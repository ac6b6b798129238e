"""
Deterministic replication engine

Replication i draws from its own counter-based stream keyed by
(master_seed, i), so results do not depend on the number of worker threads.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from ..config import default_threads
from ..distributions import CensoringSetup
from ..errors import DomainError
from ..limits.norming import norming_constants
from ..models.sample_models import ExtremeStats, ReplicationResult
from ..numerics import MAX_SEED, stream_rng
from .extremes import extreme_stats
from .sampling import draw_sample

logger = logging.getLogger(__name__)


def run_replications(
    setup: CensoringSetup,
    n: int,
    rep_count: int,
    master_seed: int,
    normalize: bool = True,
    threads: Optional[int] = None,
) -> ReplicationResult:
    """
    rep_count independent samples of size n with ExtremeStats per replication

    normalize=True solves the norming constants once (needs cure_fraction = 1
    and n >= 2) and shares them across replications.
    """
    if rep_count < 1:
        raise DomainError(f"rep_count must be >= 1, got {rep_count}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= master_seed <= MAX_SEED:
        raise DomainError(f"master seed must be an unsigned 64-bit integer, got {master_seed}")
    threads = default_threads() if threads is None else threads
    if threads < 1:
        raise DomainError(f"threads must be >= 1, got {threads}")

    norming = norming_constants(setup, n) if normalize else None

    def replicate(index: int) -> ExtremeStats:
        rng = stream_rng(master_seed, index)
        return extreme_stats(draw_sample(setup, n, rng), norming)

    logger.info(
        "Running %d replications of %s with n=%d, seed=%d on %d thread(s)",
        rep_count,
        setup.label(),
        n,
        master_seed,
        threads,
    )
    started = time.perf_counter()
    if threads == 1:
        stats = [replicate(i) for i in range(rep_count)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            stats = list(pool.map(replicate, range(rep_count)))
    logger.info("Finished %d replications in %.2fs", rep_count, time.perf_counter() - started)

    result = ReplicationResult(
        setup=setup,
        n=n,
        rep_count=rep_count,
        master_seed=master_seed,
        norming=norming,
        stats=stats,
    )
    if result.dropped_count:
        logger.warning(
            "%d of %d replications have no uncensored observation and are dropped "
            "from the stretch and count laws",
            result.dropped_count,
            rep_count,
        )
    return result
