"""Command line front end: ``oligosim run | sweep | calibrate``.

Log verbosity comes from the ``OLIGOSIM_LOG_LEVEL`` environment variable
(default ``WARNING``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from oligosim import __version__, export
from oligosim.config import ConfigError, format_config, load_config, load_sweep_spec, with_seed
from oligosim.engine import run
from oligosim.experiments import CalibrationError, calibrate, sweep

log = logging.getLogger("oligosim")


def _cmd_run(args: argparse.Namespace) -> int:
    config = with_seed(load_config(args.config), args.seed)
    result = run(config)
    for path in export.write_run(result, args.out):
        log.info("wrote %s", path)
    print(f"global_excess={export.fmt(result.global_excess)}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = load_sweep_spec(args.spec, seed=args.seed)
    result = sweep(spec, workers=args.workers)
    export.write_sweep(result, args.out)
    log.info("wrote %s", args.out)
    return 0


def _cmd_calibrate(args: argparse.Namespace) -> int:
    spec = load_sweep_spec(args.spec, seed=args.seed)
    cal = calibrate(args.target, spec, workers=args.workers)
    print(
        json.dumps(
            {
                "target": cal.target,
                "gamma_one": cal.gamma_one,
                "gamma_two": cal.gamma_two,
                "median": float(export.fmt(cal.median)),
                "fraction_positive": cal.fraction_positive,
                "replicates": spec.replicates,
            },
            indent=2,
        )
    )
    if args.write_config:
        with open(args.write_config, "w", encoding="utf-8", newline="") as fh:
            fh.write(format_config(spec.base.with_gammas(cal.gamma_one, cal.gamma_two)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oligosim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate one cycle and write CSV, JSON and SVG output")
    p.add_argument("--config", required=True, help="run config file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, help="override the config seed")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("sweep", help="run a gamma grid over many seeds and write summary CSV")
    p.add_argument("--spec", required=True, help="sweep spec file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--seed", type=int, help="override the base seed")
    p.add_argument("--workers", type=int, default=1, help="worker processes (output is unaffected)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("calibrate", help="find the grid cell whose median excess is closest to a target")
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--spec", required=True, help="sweep spec file")
    p.add_argument("--seed", type=int, help="override the base seed")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--write-config", metavar="PATH", help="also write a run config with the chosen gammas")
    p.set_defaults(func=_cmd_calibrate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=os.environ.get("OLIGOSIM_LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, CalibrationError, ValueError) as exc:
        print(f"oligosim: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"oligosim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
