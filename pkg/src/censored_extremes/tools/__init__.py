"""
MCP tools for the censored-extremes server
"""

from .law_tools import register_law_tools
from .simulation_tools import register_simulation_tools


def register_tools(mcp):
    """Register all MCP tools"""
    register_law_tools(mcp)
    register_simulation_tools(mcp)
