"""
Reading survival datasets: header time,censored with censored in {0, 1}
"""

import csv
from pathlib import Path
from typing import Union

from ..errors import ConfigError
from ..models.sample_models import SurvivalSample

DATASET_COLUMNS = ["time", "censored"]


def read_survival_csv(path: Union[str, Path], key: str = "in") -> SurvivalSample:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(key, f"no such file: {path}")

    times, censored = [], []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(row for row in fh if not row.startswith("#"))
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != DATASET_COLUMNS:
            raise ConfigError(key, f"{path}: expected header {','.join(DATASET_COLUMNS)}")
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ConfigError(key, f"{path}:{line}: expected 2 fields, got {len(row)}")
            try:
                time_value = float(row[0])
            except ValueError:
                raise ConfigError(key, f"{path}:{line}: time is not a number: {row[0]!r}")
            flag = row[1].strip()
            if flag not in ("0", "1"):
                raise ConfigError(key, f"{path}:{line}: censored must be 0 or 1, got {flag!r}")
            times.append(time_value)
            censored.append(flag == "1")

    if not times:
        raise ConfigError(key, f"{path}: no observations")
    return SurvivalSample(times=times, censored=censored)
