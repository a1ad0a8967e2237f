"""Entry point for the gmr command."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError

from gmr_cli.commands import run_command
from gmr_cli.config import get_settings
from gmr_cli.output import render, write_output
from gmr_cli.presets import get_preset
from gmr_cli.run_config import Command, OutputFormat, RunConfig
from gmr_hilbert.errors import GmrError, InvalidParamsError, VerificationMismatchError
from gmr_hilbert.logging_config import configure_logging
from gmr_hilbert.models import CostModel, GmrParams

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_MISMATCH = 3

PARAM_FLAGS = ("m", "n", "K", "r")
MODEL_FLAGS = ("omega", "c_omega", "c_wiedemann", "fieldop_bits")


class UsageError(Exception):
    """Invalid command line."""


class GmrArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)

    family = common.add_argument_group("instance family")
    family.add_argument("--preset", help="Named parameter set from the presets file")
    family.add_argument("--m", type=int, help="Row count of F")
    family.add_argument("--n", type=int, help="Column count of F")
    family.add_argument("--K", type=int, help="Number of variables")
    family.add_argument("--r", type=int, help="Target rank")
    family.add_argument("--D", type=int, help="Degree of the entries of F (default 1)")
    family.add_argument("--q", type=int, help="Field size")

    degrees = common.add_argument_group("degrees")
    degrees.add_argument("--dc", type=int, help="Single Plücker degree")
    degrees.add_argument("--dc-max", type=int, help="Use Plücker degrees 1..DC_MAX")
    degrees.add_argument("--dx-max", type=int, default=3, help="Verify dx = 1..DX_MAX")
    degrees.add_argument("--dx", type=int, default=1, help="x-degree of trials")
    degrees.add_argument("--order", type=int, help="Starting truncation order")

    runs = common.add_argument_group("runs")
    runs.add_argument("--seed", type=int, default=settings.default_seed)
    runs.add_argument("--trials", type=int, default=20, help="Number of instances")
    runs.add_argument("--workers", type=int, help="Processes for trials")
    runs.add_argument("--a-fixed", type=int, help="Only try this hybrid width")
    runs.add_argument("--max-dreg", type=int, help="Skip cells above this dreg")
    runs.add_argument(
        "--strict", action="store_true", help="Exit 3 if a verification fails"
    )
    runs.add_argument(
        "--verbose", action="store_true", help="Emit per-candidate/per-trial records"
    )

    model = common.add_argument_group("cost model")
    model.add_argument("--omega", type=float, help="Linear algebra exponent")
    model.add_argument("--c-omega", type=float, help="Dense elimination constant")
    model.add_argument("--c-wiedemann", type=float, help="Wiedemann constant")
    model.add_argument("--fieldop-bits", type=float, help="Bits per field operation")

    output = common.add_argument_group("output")
    output.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=settings.output_format,
    )
    output.add_argument("--out", type=Path, help="Output file (default stdout)")
    return common


def build_parser() -> GmrArgumentParser:
    parser = GmrArgumentParser(
        prog="gmr",
        description="Hilbert series, complexity estimates and verification runs "
        "for Generalized MinRank systems",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()
    helps = {
        Command.HILBERT: "Hilbert series of the Support-Minors system",
        Command.ESTIMATE: "Hybrid Support-Minors complexity estimate",
        Command.SWEEP_R: "Minors vs Support-Minors costs over the target rank",
        Command.VERIFY: "Check the series against Macaulay ranks of one instance",
        Command.TRIALS: "Genericity statistics over random instances",
        Command.IDENTITIES: "Exhaustive checks of the binomial identities",
    }
    for command, text in helps.items():
        subparsers.add_parser(command.value, parents=[common], help=text)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge flags and an optional preset into a RunConfig.

    Explicit flags override preset values.

    Raises:
        UsageError: If the preset is unknown or the family is only partly given
        ValidationError: If the merged values are invalid

    """
    values = {
        "m": args.m,
        "n": args.n,
        "K": args.K,
        "r": args.r,
        "D": args.D,
        "q": args.q,
    }
    if args.preset:
        try:
            preset = get_preset(args.preset)
        except KeyError as e:
            raise UsageError(e.args[0]) from e
        for name in values:
            if values[name] is None:
                values[name] = getattr(preset, name)

    command = Command(args.command)
    given = [name for name in PARAM_FLAGS if values[name] is not None]
    params = None
    sweep_dims = None
    if command is Command.SWEEP_R:
        m, n = values["m"], values["n"]
        if m is not None and n is not None:
            sweep_dims = (m, n)
    elif len(given) == len(PARAM_FLAGS):
        params = GmrParams.model_validate(
            {name: values[name] for name in PARAM_FLAGS} | {"D": values["D"] or 1}
        )
    elif given:
        missing = ", ".join(f"--{name}" for name in PARAM_FLAGS if name not in given)
        raise UsageError(f"Incomplete instance family, missing {missing}")

    overrides = {
        name: getattr(args, name)
        for name in MODEL_FLAGS
        if getattr(args, name) is not None
    }
    return RunConfig(
        command=command,
        params=params,
        sweep_dims=sweep_dims,
        dc=args.dc,
        dc_max=args.dc_max,
        dx_max=args.dx_max,
        dx=args.dx,
        q=values["q"],
        order=args.order,
        seed=args.seed,
        trials=args.trials,
        workers=args.workers,
        a_fixed=args.a_fixed,
        max_dreg=args.max_dreg,
        model=CostModel(**overrides),
        output_format=OutputFormat(args.output_format),
        out=args.out,
        strict=args.strict,
        verbose=args.verbose,
    )


def run(cfg: RunConfig) -> int:
    """Execute one configured command and write its output.

    Raises:
        VerificationMismatchError: If checks failed in strict mode or an
            identity sweep found a failing point

    """
    result = run_command(cfg)
    write_output(render(result.records, cfg.output_format), cfg.out)
    enforce = cfg.strict or cfg.command is Command.IDENTITIES
    if result.mismatches and enforce:
        raise VerificationMismatchError(result.mismatches)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        cfg = config_from_args(args)
    except UsageError as e:
        parser.error(str(e))
    except ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        parser.error(f"{location}: {error['msg']}" if location else error["msg"])

    logger.info(f"Running '{cfg.command.value}'")
    try:
        return run(cfg)
    except VerificationMismatchError as e:
        logger.error(e.message)
        return EXIT_MISMATCH
    except InvalidParamsError as e:
        logger.error(e.message)
        return EXIT_USAGE
    except GmrError as e:
        logger.error(f"{e.error_code.value}: {e.message}")
        return EXIT_COMPUTATION
    except OSError as e:
        logger.error(str(e))
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
