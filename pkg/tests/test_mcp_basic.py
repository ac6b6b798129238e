"""
Basic MCP server tests: registration, structure and direct tool calls
"""

import asyncio
import json

import pytest

from censored_extremes.models import (
    ComputeKappaArgs,
    CureTestArgs,
    KaplanMeierArgs,
    LimitLawArgs,
    NormingArgs,
    SimulateArgs,
)

EXPECTED_TOOLS = [
    "compute_kappa",
    "get_norming_constants",
    "evaluate_limit_law",
    "simulate_extremes",
    "fit_kaplan_meier",
    "run_cure_test",
]
EXPECTED_RESOURCES = ["families", "presets", "server-info"]


def _tool(mcp_server, name):
    tools = asyncio.run(mcp_server.get_tools())
    return tools[name].fn


def _resource(mcp_server, name):
    resources = asyncio.run(mcp_server.get_resources())
    return resources[f"censex://{name}"].fn


class TestMCPBasic:
    """Server creation and registered components"""

    @pytest.mark.mcp
    def test_server_creation(self, mcp_server):
        """Test MCP server can be created successfully"""
        assert mcp_server is not None
        assert mcp_server.name == "Censored Extremes"

    @pytest.mark.mcp
    def test_server_has_tools(self, mcp_server):
        """Test server has registered tools"""
        tools = asyncio.run(mcp_server.get_tools())
        assert isinstance(tools, dict)
        assert sorted(tools) == sorted(EXPECTED_TOOLS)

    @pytest.mark.mcp
    def test_server_has_resources(self, mcp_server):
        """Test server has registered resources"""
        resources = asyncio.run(mcp_server.get_resources())
        assert isinstance(resources, dict)
        names = [uri.split("://", 1)[1] for uri in resources]
        assert sorted(names) == sorted(EXPECTED_RESOURCES)

    @pytest.mark.mcp
    def test_tool_structure(self, mcp_server):
        """Test tools have proper structure"""
        tools = asyncio.run(mcp_server.get_tools())
        for tool in tools.values():
            assert hasattr(tool, "name")
            assert tool.description

    @pytest.mark.mcp
    def test_resource_structure(self, mcp_server):
        """Test resources have proper structure"""
        resources = asyncio.run(mcp_server.get_resources())
        for resource in resources.values():
            assert hasattr(resource, "uri")


class TestMCPTools:
    """Tool functions called directly"""

    @pytest.mark.mcp
    def test_compute_kappa(self, mcp_server):
        result = _tool(mcp_server, "compute_kappa")(
            ComputeKappaArgs(lifetime="exp(rate=1)", censoring="exp(rate=2)")
        )
        assert result["success"] is True
        assert result["kappa"] == pytest.approx(2.0)
        assert result["p_u"] == pytest.approx(1.0 / 3.0)

    @pytest.mark.mcp
    def test_compute_kappa_infinite(self, mcp_server):
        result = _tool(mcp_server, "compute_kappa")(
            ComputeKappaArgs(lifetime="lognormal(sigma=1)", censoring="exp(rate=1)")
        )
        assert result["success"] is True
        assert result["kappa"] == "inf"

    @pytest.mark.mcp
    def test_compute_kappa_bad_family(self, mcp_server):
        result = _tool(mcp_server, "compute_kappa")(
            ComputeKappaArgs(lifetime="pareto(alpha=2)", censoring="exp(rate=1)")
        )
        assert result["success"] is False
        assert "error" in result
        assert result["lifetime"] == "pareto(alpha=2)"

    @pytest.mark.mcp
    def test_norming_constants(self, mcp_server):
        result = _tool(mcp_server, "get_norming_constants")(
            NormingArgs(lifetime="exp(rate=1)", censoring="exp(rate=1)", n=1000)
        )
        assert result["success"] is True
        assert result["b_n"] == pytest.approx(0.5 * 6.907755278982137, rel=1e-9)
        assert result["a_n"] == pytest.approx(0.5, rel=1e-9)

    @pytest.mark.mcp
    def test_evaluate_limit_law(self, mcp_server):
        result = _tool(mcp_server, "evaluate_limit_law")(
            LimitLawArgs(law="l", kappa=1.0, points=[0.0, 1.0])
        )
        assert result["success"] is True
        assert result["values"][0] == pytest.approx(0.5)
        assert result["values"][1] == pytest.approx(1.0 / (1.0 + 1.0 / 2.718281828459045))

    @pytest.mark.mcp
    def test_evaluate_limit_law_missing_parameter(self, mcp_server):
        result = _tool(mcp_server, "evaluate_limit_law")(
            LimitLawArgs(law="gumbel", points=[0.0])
        )
        assert result["success"] is False
        assert "needs t" in result["error"]

    @pytest.mark.mcp
    def test_simulate_extremes(self, mcp_server):
        result = _tool(mcp_server, "simulate_extremes")(
            SimulateArgs(lifetime="exp(rate=1)", censoring="exp(rate=1)", n=200, reps=50)
        )
        assert result["success"] is True
        assert result["valid_replications"] + result["dropped_replications"] == 50
        assert 0.0 <= result["fraction_no_stretch"] <= 1.0
        assert "norm_L_quantiles" in result

    @pytest.mark.mcp
    def test_fit_kaplan_meier(self, mcp_server):
        result = _tool(mcp_server, "fit_kaplan_meier")(
            KaplanMeierArgs(times=[23.0, 35.0, 12.0], censored=[False, True, False])
        )
        assert result["success"] is True
        assert result["level_stretch"] == 12.0
        assert result["exceed_count"] == 1
        assert len(result["steps"]) == 2

    @pytest.mark.mcp
    def test_fit_kaplan_meier_length_mismatch(self, mcp_server):
        result = _tool(mcp_server, "fit_kaplan_meier")(
            KaplanMeierArgs(times=[1.0, 2.0], censored=[False])
        )
        assert result["success"] is False

    @pytest.mark.mcp
    def test_run_cure_test(self, mcp_server):
        result = _tool(mcp_server, "run_cure_test")(
            CureTestArgs(
                times=[2.0, 5.0, 9.0], censored=[False, False, True], kappa_hat=0.0
            )
        )
        assert result["success"] is True
        assert result["status"] == "kappa_zero"
        assert result["reject"] is True


class TestMCPResources:
    """Resource payloads"""

    @pytest.mark.mcp
    def test_families(self, mcp_server):
        payload = json.loads(_resource(mcp_server, "families")())
        families = [f["family"] for f in payload["families"]]
        assert families == ["exp", "weibull", "lognormal", "normaltail"]

    @pytest.mark.mcp
    def test_presets(self, mcp_server):
        payload = json.loads(_resource(mcp_server, "presets")())
        names = [p["name"] for p in payload["presets"]]
        assert "exp-kappa1" in names
        assert "all-fast" in names

    @pytest.mark.mcp
    def test_server_info(self, mcp_server):
        payload = json.loads(_resource(mcp_server, "server-info")())
        assert payload["name"] == "Censored Extremes MCP Server"
        assert len(payload["tools"]) == len(EXPECTED_TOOLS)
