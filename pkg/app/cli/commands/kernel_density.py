"""kernel-density: t(Q, W) for a named kernel"""

import argparse
from pathlib import Path

from app.cli.arguments import add_seed, make_rng, positive_int
from app.cli.output import emit_csv
from app.kernels.densities import t_kernel_exact_step, t_kernel_mc
from app.kernels.registry import parse_kernel
from app.posets.io import read_poset

COLUMNS = ("kernel", "value", "stderr", "samples")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "kernel-density",
        help="density of a poset in a kernel",
        description="Monte-Carlo t(Q, W); --exact sums over parts for step kernels.",
    )
    parser.add_argument("--q", type=Path, required=True, help="pattern poset Q")
    parser.add_argument("--kernel", required=True, help="kernel as name:params")
    parser.add_argument(
        "--samples", type=positive_int, default=10**6, help="Monte-Carlo samples"
    )
    parser.add_argument(
        "--exact", action="store_true", help="exact sum (step kernels only)"
    )
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    Q = read_poset(args.q)
    W = parse_kernel(args.kernel)
    if args.exact:
        row = {"value": t_kernel_exact_step(Q, W), "stderr": 0.0, "samples": 0}
    else:
        row = t_kernel_mc(Q, W, args.samples, make_rng(args.seed)).model_dump()
    emit_csv([{"kernel": W.name, **row}], COLUMNS)
    return 0
