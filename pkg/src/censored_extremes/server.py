"""
MCP server entry point for censored-extremes
"""

from fastmcp import FastMCP

from .resources import register_resources
from .tools import register_tools


def create_server() -> FastMCP:
    """Create and configure the MCP server"""
    mcp = FastMCP("Censored Extremes")

    register_tools(mcp)
    register_resources(mcp)

    return mcp


def main():
    """Main entry point"""
    server = create_server()
    server.run()


if __name__ == "__main__":
    main()
