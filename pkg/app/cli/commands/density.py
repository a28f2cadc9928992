"""density: homomorphism densities between two poset files"""

import argparse
from pathlib import Path

from app.cli.arguments import add_seed, make_rng, positive_int
from app.cli.output import emit_csv
from app.densities.exact import t_exact, t_ind_exact, t_inj_exact
from app.densities.montecarlo import t_mc
from app.posets.io import read_poset

COLUMNS = ("value", "stderr", "samples")
EXACT = {"exact": t_exact, "inj": t_inj_exact, "ind": t_ind_exact}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "density",
        help="density of one poset file in another",
        description="Print value, stderr and samples as CSV.",
    )
    parser.add_argument("--q", type=Path, required=True, help="pattern poset Q")
    parser.add_argument("--p", type=Path, required=True, help="host poset P")
    parser.add_argument(
        "--mode", choices=("exact", "inj", "ind", "mc"), default="exact", help="density"
    )
    parser.add_argument(
        "--samples", type=positive_int, default=10**5, help="Monte-Carlo samples"
    )
    add_seed(parser)
    parser.add_argument(
        "--require-closed",
        action="store_true",
        help="reject relation lists that are not transitively closed",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    Q = read_poset(args.q, require_closed=args.require_closed)
    P = read_poset(args.p, require_closed=args.require_closed)
    if args.mode == "mc":
        estimate = t_mc(Q, P, args.samples, make_rng(args.seed))
        row = estimate.model_dump()
    else:
        row = {"value": float(EXACT[args.mode](Q, P)), "stderr": 0.0, "samples": 0}
    emit_csv([row], COLUMNS)
    return 0
