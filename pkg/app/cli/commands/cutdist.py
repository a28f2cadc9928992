"""cutdist: cut-distance bounds between two step functions"""

import argparse
from pathlib import Path

from loguru import logger

from app.cli.arguments import add_seed, make_rng, positive_int
from app.core.config import settings
from app.cut.distance import cut_distance_bounds
from app.kernels.step import read_step_function


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "cutdist",
        help="lower and upper bounds on the cut distance",
        description="Print {lower, upper, coupling, method, restarts} as JSON.",
    )
    parser.add_argument("--w1", type=Path, required=True, help="first step function")
    parser.add_argument("--w2", type=Path, required=True, help="second step function")
    parser.add_argument(
        "--restarts",
        type=positive_int,
        default=settings.cut_restarts,
        help="coupling search restarts",
    )
    add_seed(parser)
    parser.add_argument("--out", type=Path, default=None, help="write JSON here")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    W1 = read_step_function(args.w1)
    W2 = read_step_function(args.w2)
    bounds = cut_distance_bounds(
        W1, W2, restarts=args.restarts, rng=make_rng(args.seed), threads=args.threads
    )
    if bounds.method == "spectral":
        logger.warning("Upper bound is spectral: the overlay is too large for exact cut norms")
    text = bounds.model_dump_json(indent=2)
    if args.out is None:
        print(text)
    else:
        args.out.write_text(text + "\n", encoding="utf-8")
    return 0
