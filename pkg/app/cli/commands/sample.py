"""sample: draw W-random posets"""

import argparse
from pathlib import Path

from loguru import logger

from app.cli.arguments import add_seed, positive_int
from app.cli.output import emit_csv, utc_now, write_run_manifest
from app.kernels.registry import parse_kernel
from app.posets.io import write_poset
from app.posets.operations import comparable_count
from app.sampling.wposet import sample_wposet
from app.utils.streams import run_replicates, substream

MANIFEST_COLUMNS = ("rep", "file", "n", "relations", "comparable")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "sample",
        help="draw W-random posets",
        description="Write one poset JSON per replicate plus manifest.csv and run.json.",
    )
    parser.add_argument("--kernel", required=True, help="kernel as name:params")
    parser.add_argument("--n", type=positive_int, required=True, help="poset size")
    parser.add_argument("--reps", type=positive_int, default=1, help="replicates")
    add_seed(parser)
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    started = utc_now()
    W = parse_kernel(args.kernel)
    args.out.mkdir(parents=True, exist_ok=True)
    logger.info("Sampling {} posets P({}, {})", args.reps, args.n, W.name)

    generators = [substream(args.seed, rep) for rep in range(args.reps)]
    posets = run_replicates(
        lambda rep, gen: sample_wposet(W, args.n, gen), generators, args.threads
    )
    rows, outputs = [], []
    for rep, P in enumerate(posets):
        path = write_poset(P, args.out / f"poset_{rep:05d}.json")
        outputs.append(path)
        rows.append(
            {
                "rep": rep,
                "file": path.name,
                "n": P.n,
                "relations": P.relation_count,
                "comparable": comparable_count(P),
            }
        )
    outputs.append(emit_csv(rows, MANIFEST_COLUMNS, args.out / "manifest.csv"))
    write_run_manifest(args.out, args.argv, args.seed, outputs, started)
    return 0
