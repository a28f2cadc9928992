"""classify: poset test of a digraph file"""

import argparse
from pathlib import Path

from app.posets.classify import classify_digraph
from app.posets.io import read_digraph


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "classify",
        help="decide whether a digraph is a strict partial order",
        description="Print POSET, or NOT-POSET with a C1, C2, C3 or P2 witness.",
    )
    parser.add_argument("--digraph", type=Path, required=True, help="digraph JSON file")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    result = classify_digraph(read_digraph(args.digraph))
    print(result.describe())
    return 0
