"""
censex command line: simulate, limits, kme, verify, test-cure and serve

Exit codes: 0 success, 1 failed verification or computation error, 2 usage or
configuration error.
"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .analysis import cure_test, estimate_kappa
from .config import default_log_level
from .distributions import CensoringSetup, kappa_of
from .errors import CensoredExtremesError, ConfigError, DomainError, UnsupportedPairError
from .estimators import fit_kme
from .limits import LimitLaw
from .models import (
    PRESETS,
    STATS_COLUMNS,
    ExperimentConfig,
    ExperimentKind,
    LawKind,
    VerificationSummary,
)
from .simulation import run_replications
from .utils import parse_grid, read_survival_csv, setup_logging, write_table
from .verification import run_custom, run_preset

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _TolerancesAction(argparse.Action):
    """--tolerance key=value, repeatable"""

    def __call__(self, parser, namespace, values, option_string=None):
        current = dict(getattr(namespace, self.dest, None) or {})
        key, sep, raw = values.partition("=")
        if not sep:
            parser.error(f"{option_string} expects key=value, got {values!r}")
        try:
            current[key.strip()] = float(raw)
        except ValueError:
            parser.error(f"{option_string} {key}: not a number: {raw!r}")
        setattr(namespace, self.dest, current)


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file; flags override its values")
    parser.add_argument("--out", help="Output file (default: stdout)")
    parser.add_argument("--format", choices=["csv", "json"], help="Output format")
    parser.add_argument(
        "--comparison",
        action="store_true",
        help="Leave out the timestamp so reruns are byte-identical",
    )
    parser.add_argument("--threads", type=int, help="Worker threads for replications")


def _add_setup_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lifetime", help="Lifetime family, e.g. exp(rate=1)")
    parser.add_argument("--censoring", help="Censoring family, e.g. exp(rate=1)")
    parser.add_argument("--cure-fraction", dest="cure_fraction", type=float)
    parser.add_argument("--n", type=int, help="Sample size")
    parser.add_argument("--reps", type=int, help="Number of replications")
    parser.add_argument("--seed", type=int, help="Master seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="censex",
        description="Extremes of censored lifetimes: simulation and limit-law checks",
        argument_default=argparse.SUPPRESS,
    )
    parser.add_argument("--version", action="version", version=f"censex {__version__}")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: CENSEX_LOG_LEVEL or WARNING)",
    )
    parser.add_argument("--log-file", dest="log_file", help="Also log to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser(
        "simulate",
        help="Per-replication extreme statistics",
        argument_default=argparse.SUPPRESS,
    )
    _add_setup_options(simulate)
    simulate.add_argument(
        "--no-normalize",
        dest="normalize",
        action="store_false",
        help="Skip the norming constants (norm_L left empty)",
    )
    _add_output_options(simulate)

    limits = commands.add_parser(
        "limits", help="Evaluate a limit law on a grid", argument_default=argparse.SUPPRESS
    )
    limits.add_argument("--law", choices=[k.value for k in LawKind])
    limits.add_argument("--kappa", type=float)
    limits.add_argument("--t", type=float, help="Extremal-process time (gumbel)")
    limits.add_argument("--grid", help="start:stop:step or a comma list")
    _add_output_options(limits)

    kme = commands.add_parser(
        "kme", help="Kaplan-Meier step table", argument_default=argparse.SUPPRESS
    )
    kme.add_argument("--in", dest="input", help="Dataset CSV with header time,censored")
    _add_output_options(kme)

    verify = commands.add_parser(
        "verify", help="Run a verification preset", argument_default=argparse.SUPPRESS
    )
    verify.add_argument("--preset", help=f"One of: {', '.join(PRESETS)}")
    _add_setup_options(verify)
    verify.add_argument("--draws", type=int, help="Oracle draws for the r-law preset")
    verify.add_argument(
        "--tolerance",
        dest="tolerances",
        action=_TolerancesAction,
        metavar="KEY=VALUE",
        help="Override one tolerance, repeatable",
    )
    _add_output_options(verify)

    cure = commands.add_parser(
        "test-cure",
        help="Test for the existence of a cure proportion",
        argument_default=argparse.SUPPRESS,
    )
    cure.add_argument("--in", dest="input", help="Dataset CSV with header time,censored")
    cure.add_argument("--alpha", type=float)
    kappa_source = cure.add_mutually_exclusive_group()
    kappa_source.add_argument("--kappa", type=float, help="Known or estimated κ")
    kappa_source.add_argument(
        "--estimate-kappa",
        dest="estimate_kappa",
        action="store_true",
        help="Use the exceedance count as κ̂",
    )
    cure.add_argument(
        "--critical-law", dest="critical_law", choices=["integral", "ratio"]
    )
    _add_setup_options(cure)
    _add_output_options(cure)

    commands.add_parser("serve", help="Run the MCP server over stdio")
    return parser


def _load_config_file(path: str) -> Dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError("config", f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError("config", f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("config", f"{path} must hold a JSON object")
    return data


def config_from_namespace(args: argparse.Namespace) -> ExperimentConfig:
    """Merge defaults, the --config file and the given flags"""
    flags = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "config", "log_level", "log_file")
    }
    values = _load_config_file(args.config) if getattr(args, "config", None) else {}
    if "tolerances" in flags:
        flags["tolerances"] = {**values.get("tolerances", {}), **flags["tolerances"]}
    values.update(flags)
    values["experiment"] = args.command
    try:
        return ExperimentConfig.model_validate(values)
    except ValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(p) for p in first["loc"]) or "config"
        raise ConfigError(key, first["msg"]) from e


def parse_config(argv: Optional[Sequence[str]] = None) -> ExperimentConfig:
    """Parse command-line arguments (and any --config file) into a config"""
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        raise ConfigError("command", "serve takes no experiment configuration")
    return _validated_config(args)


def _validated_config(args: argparse.Namespace) -> ExperimentConfig:
    config = config_from_namespace(args)
    if config.experiment == ExperimentKind.VERIFY:
        _check_verify_pair(config)
    return config


def _check_verify_pair(config: ExperimentConfig) -> None:
    """A custom verify run needs a pair with finite κ and no immune fraction"""
    if config.preset is not None or config.lifetime is None or config.censoring is None:
        return
    try:
        kappa = kappa_of(config.lifetime, config.censoring)
    except UnsupportedPairError as e:
        raise ConfigError("censoring", str(e)) from e
    if math.isinf(kappa):
        label = f"{config.lifetime.label()} / {config.censoring.label()}"
        raise ConfigError("censoring", f"{label} has κ=∞, which the limit laws do not cover")
    if config.cure_fraction < 1.0:
        raise ConfigError("cure_fraction", "verification runs need cure_fraction = 1")


def _metadata(config: ExperimentConfig, **summary: Any) -> Dict[str, Any]:
    metadata = {
        "version": __version__,
        "command": config.experiment.value,
        "seed": config.seed,
        "config": config.echo(),
    }
    if summary:
        metadata["summary"] = summary
    return metadata


def _emit(config: ExperimentConfig, columns, rows, metadata, extra=None) -> None:
    write_table(
        columns,
        rows,
        metadata,
        out=config.out,
        fmt=config.format.value,
        comparison=config.comparison,
        extra=extra,
    )


def _require(config: ExperimentConfig, *keys: str) -> None:
    for key in keys:
        if getattr(config, key) is None:
            flag = "--in" if key == "input" else f"--{key.replace('_', '-')}"
            raise ConfigError(key, f"{flag} is required for {config.experiment.value}")


def _setup(config: ExperimentConfig) -> CensoringSetup:
    _require(config, "lifetime", "censoring")
    return CensoringSetup(
        lifetime=config.lifetime,
        censoring=config.censoring,
        cure_fraction=config.cure_fraction,
    )


def run_simulate(config: ExperimentConfig) -> int:
    setup = _setup(config)
    normalize = config.normalize and setup.is_proper and config.n >= 2
    if config.normalize and not normalize:
        logger.info("Norming constants skipped: they need cure_fraction = 1 and n >= 2")
    results = run_replications(
        setup,
        config.n,
        config.reps,
        config.seed,
        normalize=normalize,
        threads=config.threads,
    )
    by_alias = [s.model_dump(by_alias=True) for s in results.stats]
    rows = [[i] + [row[c] for c in STATS_COLUMNS] for i, row in enumerate(by_alias)]
    summary = {
        **results.setup_summary(),
        "dropped": results.dropped_count,
        "p_u": setup.p_u,
        "p_c": setup.p_c,
    }
    if results.norming is not None:
        summary.update(b_n=results.norming.b_n, a_n=results.norming.a_n)
    _emit(config, ["rep"] + STATS_COLUMNS, rows, _metadata(config, **summary))
    return EXIT_OK


def _limit_law(config: ExperimentConfig) -> LimitLaw:
    _require(config, "law", "grid")
    try:
        if config.law == LawKind.GUMBEL_MARGINAL:
            _require(config, "t")
            return LimitLaw.gumbel_marginal(config.t)
        _require(config, "kappa")
        constructors = {
            LawKind.L: LimitLaw.l_law,
            LawKind.R: LimitLaw.r_law,
            LawKind.R_RATIO: LimitLaw.r_ratio_law,
            LawKind.GEOMETRIC: LimitLaw.geometric,
            LawKind.POISSON_MIXTURE: LimitLaw.poisson_mixture,
        }
        return constructors[config.law](config.kappa)
    except DomainError as e:
        key = "t" if config.law == LawKind.GUMBEL_MARGINAL else "kappa"
        raise ConfigError(key, str(e)) from e


def run_limits(config: ExperimentConfig) -> int:
    law = _limit_law(config)
    grid = parse_grid(config.grid)
    if law.is_discrete and any(x != int(x) or x < 0 for x in grid):
        raise ConfigError("grid", "discrete laws take non-negative integer points")
    try:
        values = [float(law.evaluate(int(x) if law.is_discrete else x)) for x in grid]
    except DomainError as e:
        raise ConfigError("grid", str(e)) from e
    parameter = law.t if law.kind == LawKind.GUMBEL_MARGINAL else law.kappa
    rows = [[law.kind.value, parameter, x, v] for x, v in zip(grid, values)]
    _emit(config, ["law", "kappa", "x", "value"], rows, _metadata(config))
    return EXIT_OK


def run_kme(config: ExperimentConfig) -> int:
    _require(config, "input")
    curve = fit_kme(read_survival_csv(config.input))
    summary = {
        "n": curve.n,
        "level_stretch": curve.level_stretch,
        "exceed_count": curve.exceed_count,
        "plateau_level": curve.plateau_level,
        "largest_observation": curve.largest_observation,
        "largest_uncensored": curve.largest_uncensored,
    }
    rows = [
        [r["time"], r["survivor"], r["at_risk"], r["events"]]
        for r in curve.step_table()
    ]
    _emit(
        config,
        ["time", "survivor", "at_risk", "events"],
        rows,
        _metadata(config, **summary),
        extra={"summary": summary},
    )
    return EXIT_OK


def _verification_rows(summary: VerificationSummary) -> List[List[Any]]:
    return [
        [r.label, r.statistic, r.observed, r.threshold, r.sample_size, r.passed]
        for r in summary.reports
    ]


def run_verify(config: ExperimentConfig) -> int:
    if config.preset is not None:
        overrides = dict(config.tolerances)
        if config.draws is not None:
            overrides["draws"] = float(config.draws)
        summary = run_preset(config.preset, config.threads, overrides)
    else:
        setup = _setup(config)
        summary = run_custom(
            setup, config.n, config.reps, config.seed, config.tolerances, config.threads
        )
    _emit(
        config,
        ["check", "statistic", "observed", "threshold", "sample_size", "passed"],
        _verification_rows(summary),
        _metadata(config, preset=summary.preset, passed=summary.passed),
    )
    return EXIT_OK if summary.passed else EXIT_FAILED


def run_test_cure(config: ExperimentConfig) -> int:
    if config.kappa is not None and config.estimate_kappa:
        raise ConfigError("kappa", "give either --kappa or --estimate-kappa")
    if config.input is not None:
        if config.kappa is None and not config.estimate_kappa:
            raise ConfigError("kappa", "--kappa or --estimate-kappa is required")
        data = read_survival_csv(config.input)
    elif config.lifetime is not None and config.censoring is not None:
        data = run_replications(
            _setup(config),
            config.n,
            config.reps,
            config.seed,
            normalize=False,
            threads=config.threads,
        )
    else:
        raise ConfigError("in", "--in or --lifetime/--censoring is required for test-cure")

    kappa_hat = config.kappa if config.kappa is not None else estimate_kappa(data)
    result = cure_test(data, config.alpha, kappa_hat, config.critical_law)
    record = result.model_dump(mode="json")
    columns = list(record)
    _emit(config, columns, [[record[c] for c in columns]], _metadata(config))
    return EXIT_OK


RUNNERS = {
    ExperimentKind.SIMULATE: run_simulate,
    ExperimentKind.LIMITS: run_limits,
    ExperimentKind.KME: run_kme,
    ExperimentKind.VERIFY: run_verify,
    ExperimentKind.TEST_CURE: run_test_cure,
}


def run(config: ExperimentConfig) -> int:
    """Dispatch a parsed configuration; returns the exit code"""
    try:
        return RUNNERS[config.experiment](config)
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        print(f"censex: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CensoredExtremesError as e:
        logger.error("%s failed: %s", config.experiment.value, e)
        print(f"censex: {config.experiment.value} failed: {e}", file=sys.stderr)
        return EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        setup_logging(
            getattr(args, "log_level", None) or default_log_level(),
            getattr(args, "log_file", None),
        )
        if args.command == "serve":
            from .server import main as serve

            serve()
            return EXIT_OK
        config = _validated_config(args)
    except ConfigError as e:
        print(f"censex: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
