"""thin: thinning of a kernel or of a poset file"""

import argparse
from pathlib import Path

from app.cli.arguments import add_seed, make_rng, positive_int, probability
from app.cli.output import emit_csv
from app.core.exceptions import ValidationError
from app.kernels.densities import t_kernel_mc
from app.kernels.registry import parse_kernel
from app.kernels.thinning import thin, thin_poset
from app.posets.io import read_poset, write_poset
from app.posets.operations import comparable_count

COLUMNS = (
    "s",
    "comparable",
    "base_value",
    "base_stderr",
    "thinned_value",
    "thinned_stderr",
    "predicted_ratio",
)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "thin",
        help="thin a kernel (densities) or a poset file",
        description=(
            "With --kernel and --q print t(Q, W) and t(Q, thin(W, s)) next to the "
            "predicted ratio s^c(Q); with --poset write a thinned copy to --out."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--kernel", help="kernel as name:params")
    source.add_argument("--poset", type=Path, help="poset JSON file")
    parser.add_argument("--s", type=probability, required=True, help="keep probability")
    parser.add_argument("--q", type=Path, default=None, help="pattern poset Q")
    parser.add_argument(
        "--samples", type=positive_int, default=10**6, help="Monte-Carlo samples"
    )
    parser.add_argument("--out", type=Path, default=None, help="thinned poset file")
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    rng = make_rng(args.seed)
    if args.poset is not None:
        if args.out is None:
            raise ValidationError("--poset needs --out", field="out")
        write_poset(thin_poset(read_poset(args.poset), args.s, rng), args.out)
        return 0

    if args.q is None:
        raise ValidationError("--kernel needs --q", field="q")
    Q = read_poset(args.q)
    W = parse_kernel(args.kernel)
    base = t_kernel_mc(Q, W, args.samples, rng)
    thinned = t_kernel_mc(Q, thin(W, args.s), args.samples, rng)
    c = comparable_count(Q)
    row = {
        "s": args.s,
        "comparable": c,
        "base_value": base.value,
        "base_stderr": base.stderr,
        "thinned_value": thinned.value,
        "thinned_stderr": thinned.stderr,
        "predicted_ratio": float(args.s**c),
    }
    emit_csv([row], COLUMNS)
    return 0
