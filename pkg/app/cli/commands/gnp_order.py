"""gnp-order: random graph orders"""

import argparse
import math

from app.cli.arguments import add_seed, float_list, positive_int
from app.cli.output import emit_csv
from app.sampling.wposet import gnp_order
from app.utils.streams import substream

COLUMNS = ("n", "p", "rep", "relations", "t_chain2")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "gnp-order",
        help="transitive closures of upward-oriented G(n, p)",
        description="Print relation counts and t(chain2, P) = relations / n^2 as CSV.",
    )
    parser.add_argument("--n", type=positive_int, required=True, help="vertices")
    parser.add_argument(
        "--p", type=float_list, required=True, help="comma-separated edge probabilities"
    )
    parser.add_argument(
        "--log-scale",
        action="store_true",
        help="read each p as a multiple of log(n) / n",
    )
    parser.add_argument("--reps", type=positive_int, default=1, help="replicates per p")
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    scale = math.log(args.n) / args.n if args.log_scale else 1.0
    rows = []
    for index, factor in enumerate(args.p):
        p = min(1.0, factor * scale)
        for rep in range(args.reps):
            P = gnp_order(args.n, p, substream(args.seed, index * args.reps + rep))
            rows.append(
                {
                    "n": args.n,
                    "p": p,
                    "rep": rep,
                    "relations": P.relation_count,
                    "t_chain2": P.relation_count / args.n**2,
                }
            )
    emit_csv(rows, COLUMNS)
    return 0
