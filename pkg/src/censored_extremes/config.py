"""
Environment-driven defaults
"""

import os
from typing import Optional

from pydantic import PositiveInt, TypeAdapter, ValidationError

from .errors import ConfigError

THREADS_ENV = "CENSEX_THREADS"
LOG_LEVEL_ENV = "CENSEX_LOG_LEVEL"

DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

_positive_int = TypeAdapter(PositiveInt)


def default_threads(environ: Optional[dict] = None) -> int:
    """Worker threads for replication runs, from CENSEX_THREADS"""
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return DEFAULT_THREADS
    try:
        return _positive_int.validate_python(raw, strict=False)
    except ValidationError as e:
        raise ConfigError(THREADS_ENV, f"expected a positive integer, got {raw!r}") from e


def default_log_level(environ: Optional[dict] = None) -> str:
    """Logging level name, from CENSEX_LOG_LEVEL"""
    environ = os.environ if environ is None else environ
    level = environ.get(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
    if level not in LOG_LEVELS:
        raise ConfigError(LOG_LEVEL_ENV, f"expected one of {', '.join(LOG_LEVELS)}")
    return level
