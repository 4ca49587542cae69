"""
Command line for the simulator.

    szsim run <scenario> [--n N] [--steps T] [--marked K ...] [--mode apr|absorb]
                         [--seed S] [--sizes N ...] [--repeats R] [--graph FILE]
                         [--p0-node I] [--record-second] [--renorm-every K]
                         [--out PATH] [--format csv|json]
    szsim cast <coins.json> [--double] [--tol TOL]

Exit codes: 0 success, 2 validation error, 3 numerical invariant violation.
Worker threads come from SZSIM_THREADS only.
"""
from typing import List, Optional
import argparse
import json
import logging
import sys

from pydantic import ValidationError

from api.config import settings
from api.errors import NumericalInvariantViolation, ValidationFailure
from api.services.coins import cast_to_szegedy, check_double_castability, load_coin_set
from api.services.experiments import (
    ExperimentConfig,
    OutputFormat,
    Scenario,
    SearchMode,
    record_to_csv,
    run_experiment,
    write_record,
)

logger = logging.getLogger("szsim")

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="szsim", description="Graph-phased Szegedy quantum walk simulator")
    p.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment scenario")
    run.add_argument("scenario", choices=[s.value for s in Scenario])
    run.add_argument("--n", dest="n_nodes", type=int, default=None, help="number of nodes")
    run.add_argument("--steps", type=int, default=100, help="time steps (double steps for search)")
    run.add_argument("--marked", type=int, nargs="+", default=[], help="marked nodes (search)")
    run.add_argument("--mode", choices=[m.value for m in SearchMode], default=SearchMode.APR.value)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--sizes", type=int, nargs="+", default=None, help="node counts (scaling-bench)")
    run.add_argument("--repeats", type=int, default=5, help="timed steps per size (scaling-bench)")
    run.add_argument("--graph", dest="graph_file", default=None, help="graph JSON (custom, classical-check)")
    run.add_argument("--p0-node", type=int, default=0, help="initial node (classical-check)")
    run.add_argument("--record-second", action="store_true", help="also record the second register")
    run.add_argument("--renorm-every", type=int, default=None, help="renormalize every K steps")
    run.add_argument("--out", default=None, help="output path (stdout when omitted)")
    run.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)

    cast = sub.add_parser("cast", help="cast a coin set into a Szegedy walk")
    cast.add_argument("coins", help="coin-set JSON file")
    cast.add_argument("--double", action="store_true", help="check castability of the double step")
    cast.add_argument("--tol", type=float, default=None, help="eigenvalue tolerance")
    return p


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    fields = {
        "scenario": args.scenario,
        "steps": args.steps,
        "n_nodes": args.n_nodes,
        "marked": args.marked,
        "mode": args.mode,
        "seed": args.seed,
        "repeats": args.repeats,
        "graph_file": args.graph_file,
        "p0_node": args.p0_node,
        "record_second": args.record_second,
        "renorm_every": args.renorm_every,
        "out": args.out,
        "format": args.format,
    }
    if args.sizes is not None:
        fields["sizes"] = args.sizes
    return ExperimentConfig(**fields)


def command_run(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    record = run_experiment(config)

    if config.out is not None:
        write_record(record, config.out, config.format)
    elif config.format == OutputFormat.JSON:
        print(json.dumps(record.model_dump(mode="json"), indent=2, sort_keys=True))
    else:
        sys.stdout.write(record_to_csv(record))

    if record.metadata:
        logger.info(f"✅ {config.scenario.value}: {json.dumps(record.metadata, sort_keys=True)}")
    return EXIT_OK


def command_cast(args: argparse.Namespace) -> int:
    coin_set, adjacency = load_coin_set(args.coins)
    if args.double:
        kwargs = {} if args.tol is None else {"tol": args.tol}
        output = check_double_castability(coin_set, adjacency, **kwargs).to_dict()
    else:
        output = cast_to_szegedy(coin_set, adjacency, tol=args.tol).to_dict()
    print(json.dumps(output, indent=2, sort_keys=True))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args)

    try:
        if args.command == "run":
            return command_run(args)
        return command_cast(args)
    except ValidationError as e:
        logger.error(f"❌ Invalid configuration: {e}")
        return EXIT_VALIDATION
    except ValidationFailure as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except NumericalInvariantViolation as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
