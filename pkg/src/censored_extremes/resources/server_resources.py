"""
Server information resources
"""

import json

from .. import __version__


def register_server_resources(mcp):
    """Register server information resources"""

    @mcp.resource("censex://server-info")
    def get_server_info_resource() -> str:
        """
        Get information about the MCP server and its capabilities as a resource
        """
        server_info = {
            "name": "Censored Extremes MCP Server",
            "description": "Limit laws for the largest censored and uncensored "
            "lifetimes, with simulation and a test for cure proportions",
            "version": __version__,
            "resources": [
                "censex://families - Supported distribution families",
                "censex://presets - Verification presets",
                "censex://server-info - Server capabilities and metadata",
            ],
            "tools": [
                "compute_kappa - Balance parameter and event probabilities",
                "get_norming_constants - Centering and scale of the maximum",
                "evaluate_limit_law - L, ratio, count and Gumbel marginal laws",
                "simulate_extremes - Replication summary of the extremes",
                "fit_kaplan_meier - Kaplan-Meier step table and level stretch",
                "run_cure_test - Test for the existence of a cure proportion",
            ],
            "notes": [
                "κ is reported as the string 'inf' when f/g diverges",
                "Replications are reproducible from the master seed",
            ],
        }
        return json.dumps(server_info, ensure_ascii=False, indent=2)
