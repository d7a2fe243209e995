"""Command-line front end.

Subcommands::

    point     --t1 --t2 --a1 --a2 [--json]
    sweep     --t1 --t2 [--eta-lo --eta-hi --steps --out PATH
                         --format csv|json] [--parallel]
    optimize  --t1 --t2 [--json]
    classical --t1 --t2 --xi

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure, 4 I/O failure.
"""

import argparse
import dataclasses
import json
import sys

from .errors import ConvergenceError, DomainError
from .sweep import (
    SweepConfig,
    run_classical,
    run_optimize,
    run_point,
    run_sweep,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tls-engine",
        description="Two-TLS swap heat engine: work extraction and "
        "nonequilibrium temperatures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one explicit setup")
    point.add_argument("--t1", type=float, required=True, help="hot bath temperature")
    point.add_argument("--t2", type=float, required=True, help="cold bath temperature")
    point.add_argument("--a1", type=float, required=True, help="larger energy gap")
    point.add_argument("--a2", type=float, required=True, help="smaller energy gap")
    point.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sweep = sub.add_parser("sweep", help="max-work sweep over efficiency")
    sweep.add_argument("--t1", type=float, required=True)
    sweep.add_argument("--t2", type=float, required=True)
    sweep.add_argument("--eta-lo", type=float, default=0.01)
    sweep.add_argument("--eta-hi", type=float, default=None,
                       help="default: Carnot bound minus 0.01")
    sweep.add_argument("--steps", type=int, default=400)
    sweep.add_argument("--out", default="sweep.csv", help="output file path")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--parallel", action="store_true",
                       help="evaluate gridpoints in a process pool")

    optimize = sub.add_parser("optimize", help="global maximum-work search")
    optimize.add_argument("--t1", type=float, required=True)
    optimize.add_argument("--t2", type=float, required=True)
    optimize.add_argument("--json", action="store_true")

    classical = sub.add_parser("classical", help="macroscopic two-body baseline")
    classical.add_argument("--t1", type=float, required=True)
    classical.add_argument("--t2", type=float, required=True)
    classical.add_argument("--xi", type=float, required=True,
                           help="heat-capacity ratio C1/C2")
    return parser


def _print_report(data: dict, as_json: bool):
    if as_json:
        print(json.dumps(data, indent=2))
        return
    width = max(len(k) for k in data)
    for key, value in data.items():
        if isinstance(value, float):
            print(f"{key:<{width}} = {value:.12g}")
        else:
            print(f"{key:<{width}} = {value}")


def _cmd_point(args) -> int:
    _print_report(run_point(args.t1, args.t2, args.a1, args.a2), args.json)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    eta_hi = args.eta_hi
    if eta_hi is None:
        if args.t1 <= 0:
            raise DomainError(f"T1 must be positive, got {args.t1!r}")
        eta_hi = 1.0 - args.t2 / args.t1 - 0.01
    config = SweepConfig(
        t1=args.t1,
        t2=args.t2,
        eta_lo=args.eta_lo,
        eta_hi=eta_hi,
        steps=args.steps,
        output_path=args.out,
        format=args.format,
    )
    rows = run_sweep(config, parallel=args.parallel)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def _cmd_optimize(args) -> int:
    result = run_optimize(args.t1, args.t2)
    _print_report(dataclasses.asdict(result), args.json)
    return EXIT_OK


def _cmd_classical(args) -> int:
    result = run_classical(args.t1, args.t2, args.xi)
    _print_report(
        {
            "xi": result.xi,
            "t_final": result.t_final,
            "work_per_c2": result.work,
            "efficiency": result.efficiency,
        },
        as_json=False,
    )
    return EXIT_OK


_COMMANDS = {
    "point": _cmd_point,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
    "classical": _cmd_classical,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
