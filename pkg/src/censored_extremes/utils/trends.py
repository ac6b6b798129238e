"""
Monotone-trend flags for convergence reports
"""

from typing import Sequence


def is_non_increasing(values: Sequence[float], slack: float = 0.0) -> bool:
    return all(b <= a + slack for a, b in zip(values, values[1:]))


def is_strictly_increasing(values: Sequence[float]) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))


def count_increases(values: Sequence[float], slack: float = 0.0) -> int:
    """Number of steps where the sequence rises by more than slack"""
    return sum(1 for a, b in zip(values, values[1:]) if b > a + slack)
