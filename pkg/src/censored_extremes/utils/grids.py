"""
Grid syntax for the limits front-end: start:stop:step or a comma list
"""

import math
from typing import List

from ..errors import ConfigError

GRID_DECIMALS = 12


def parse_grid(text: str, key: str = "grid") -> List[float]:
    """
    "0.1:0.9:0.1" gives 0.1, 0.2, ..., 0.9 (stop included); "1,2,5" gives the list

    Range points are rounded to 12 decimals so that 0.1 + 2·0.1 prints as 0.3.
    """
    text = text.strip()
    if not text:
        raise ConfigError(key, "empty grid")
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ConfigError(key, f"expected start:stop:step, got {text!r}")
            start, stop, step = parts
            if step <= 0 or stop < start:
                raise ConfigError(key, "need step > 0 and stop >= start")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + i * step, GRID_DECIMALS) for i in range(count)]
        return [float(p) for p in text.split(",")]
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(key, f"not a number in {text!r}") from e
