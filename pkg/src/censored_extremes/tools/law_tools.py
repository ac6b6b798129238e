"""
Balance parameter, norming and limit-law MCP tools
"""

from typing import Any, Dict

from ..distributions import CensoringSetup
from ..limits import LimitLaw, norming_constants
from ..models import ComputeKappaArgs, LawKind, LimitLawArgs, NormingArgs


def register_law_tools(mcp):
    """Register κ, norming and limit-law tools"""

    @mcp.tool()
    def compute_kappa(args: ComputeKappaArgs) -> Dict[str, Any]:
        """
        Compute the balance parameter κ = lim f/g of a lifetime/censoring pair

        Also returns the probabilities that an observation is uncensored (p_u)
        or censored (p_c). κ = "inf" means the censoring tail is much lighter
        and the limit laws do not apply.
        """
        try:
            setup = CensoringSetup(
                lifetime=args.lifetime,
                censoring=args.censoring,
                cure_fraction=args.cure_fraction,
            )
            return {
                "success": True,
                **setup.summary(),
                "p_u": setup.p_u,
                "p_c": setup.p_c,
            }
        except Exception as e:
            return {
                "success": False,
                "error": str(e),
                "lifetime": args.lifetime,
                "censoring": args.censoring,
            }

    @mcp.tool()
    def get_norming_constants(args: NormingArgs) -> Dict[str, Any]:
        """
        Solve n·H̄(b_n) = 1 and a_n = h(b_n) for the maximum of n observed times
        """
        try:
            setup = CensoringSetup(lifetime=args.lifetime, censoring=args.censoring)
            norming = norming_constants(setup, args.n)
            return {
                "success": True,
                "setup": setup.summary(),
                "n": norming.n,
                "b_n": norming.b_n,
                "a_n": norming.a_n,
            }
        except Exception as e:
            return {"success": False, "error": str(e), "n": args.n}

    @mcp.tool()
    def evaluate_limit_law(args: LimitLawArgs) -> Dict[str, Any]:
        """
        Evaluate a limit law at the given points

        l and gumbel return cdf values, r and r-ratio return tail
        probabilities, count and poisson return pmf values at integer points.
        """
        try:
            if args.law == LawKind.GUMBEL_MARGINAL:
                if args.t is None:
                    raise ValueError("the gumbel law needs t")
                law = LimitLaw.gumbel_marginal(args.t)
            else:
                if args.kappa is None:
                    raise ValueError(f"the {args.law.value} law needs kappa")
                law = {
                    LawKind.L: LimitLaw.l_law,
                    LawKind.R: LimitLaw.r_law,
                    LawKind.R_RATIO: LimitLaw.r_ratio_law,
                    LawKind.GEOMETRIC: LimitLaw.geometric,
                    LawKind.POISSON_MIXTURE: LimitLaw.poisson_mixture,
                }[args.law](args.kappa)

            values = [float(law.evaluate(x)) for x in args.points]
            return {
                "success": True,
                "law": law.kind.value,
                "kappa": law.kappa,
                "t": law.t,
                "points": args.points,
                "values": values,
            }
        except Exception as e:
            return {"success": False, "error": str(e), "law": args.law.value}
