"""
Simulation, Kaplan-Meier and cure-test MCP tools
"""

from typing import Any, Dict

import numpy as np

from ..analysis import cure_test, estimate_kappa
from ..distributions import CensoringSetup
from ..estimators import fit_kme
from ..models import CureTestArgs, KaplanMeierArgs, SimulateArgs, SurvivalSample
from ..simulation import run_replications


def _sample(args: KaplanMeierArgs) -> SurvivalSample:
    return SurvivalSample(times=args.times, censored=args.censored)


def register_simulation_tools(mcp):
    """Register replication, estimator and test tools"""

    @mcp.tool()
    def simulate_extremes(args: SimulateArgs) -> Dict[str, Any]:
        """
        Run replications of the censoring model and summarize the extremes

        Returns the share of replications whose largest observation is
        uncensored, the mean exceedance count (the κ estimate) and quantiles
        of the normalized level stretch.
        """
        try:
            setup = CensoringSetup(
                lifetime=args.lifetime,
                censoring=args.censoring,
                cure_fraction=args.cure_fraction,
            )
            results = run_replications(
                setup,
                args.n,
                args.reps,
                args.seed,
                normalize=args.normalize and setup.is_proper,
            )
            summary: Dict[str, Any] = {
                "success": True,
                **results.setup_summary(),
                "valid_replications": len(results.valid_stats),
                "dropped_replications": results.dropped_count,
                "fraction_no_stretch": results.fraction_no_stretch(),
                "kappa_hat": estimate_kappa(results) if results.valid_stats else None,
            }
            if results.norming is not None:
                norm_l = results.column("norm_L")
                summary["norming"] = results.norming.model_dump()
                if norm_l.size:
                    summary["norm_L_quantiles"] = {
                        str(q): float(np.quantile(norm_l, q)) for q in (0.5, 0.9, 0.99)
                    }
            return summary
        except Exception as e:
            return {
                "success": False,
                "error": str(e),
                "lifetime": args.lifetime,
                "censoring": args.censoring,
            }

    @mcp.tool()
    def fit_kaplan_meier(args: KaplanMeierArgs) -> Dict[str, Any]:
        """
        Fit the Kaplan-Meier estimator and report its terminal flat segment

        level_stretch is the largest observation minus the largest uncensored
        time; exceed_count is the number of censored times beyond it.
        """
        try:
            curve = fit_kme(_sample(args))
            return {
                "success": True,
                "steps": curve.step_table(),
                "plateau_level": curve.plateau_level,
                "level_stretch": curve.level_stretch,
                "exceed_count": curve.exceed_count,
                "largest_observation": curve.largest_observation,
                "largest_uncensored": curve.largest_uncensored,
            }
        except Exception as e:
            return {"success": False, "error": str(e)}

    @mcp.tool()
    def run_cure_test(args: CureTestArgs) -> Dict[str, Any]:
        """
        Test H0: κ = 0 (no cure proportion) on one dataset

        Rejects when R = (M − M_u)/M exceeds the critical value of the ratio
        law at κ̂ and level alpha.
        """
        try:
            result = cure_test(_sample(args), args.alpha, args.kappa_hat, args.law)
            return {"success": True, **result.model_dump()}
        except Exception as e:
            return {"success": False, "error": str(e), "alpha": args.alpha}
