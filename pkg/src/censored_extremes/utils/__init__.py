"""
Utilities: logging setup, result emission, dataset reading and grid parsing
"""

from .grids import parse_grid
from .io import read_survival_csv
from .logging_utils import setup_logging
from .output import read_metadata, render_table, write_table

__all__ = [
    "parse_grid",
    "read_survival_csv",
    "setup_logging",
    "read_metadata",
    "render_table",
    "write_table",
]
