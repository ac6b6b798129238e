"""
Counter-based random streams keyed by (master seed, stream index)
"""

import numpy as np

MAX_SEED = 2**64 - 1


def stream_rng(master_seed: int, index: int) -> np.random.Generator:
    """
    Independent Philox generator for one replication

    The stream depends only on (master_seed, index), so replications can run
    in any order or on any number of threads.
    """
    if not 0 <= master_seed <= MAX_SEED:
        raise ValueError(f"master seed must be a 64-bit unsigned integer, got {master_seed}")
    seq = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(seq))
