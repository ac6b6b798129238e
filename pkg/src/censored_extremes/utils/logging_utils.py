"""
Logging setup for the censored_extremes package
"""

import logging
from pathlib import Path
from typing import Optional, Union

PACKAGE_LOGGER = "censored_extremes"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    level: Union[str, int] = "WARNING", log_file: Optional[Path] = None
) -> logging.Logger:
    """
    Configure the package logger with a stderr handler and an optional file handler

    Calling it again replaces the handlers, so repeated CLI invocations in one
    process do not duplicate output.
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    stream = logging.StreamHandler()
    stream.setFormatter(formatter)
    logger.addHandler(stream)

    if log_file is not None:
        fh = logging.FileHandler(log_file, encoding="utf-8")
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    return logger
