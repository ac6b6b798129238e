"""
Censored Extremes MCP Server
Entry point for running the server from a source checkout
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from censored_extremes.server import main  # noqa: E402

if __name__ == "__main__":
    main()
