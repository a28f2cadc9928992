"""Top-level argument parser."""

import argparse

from app import __version__
from app.cli.commands import COMMANDS
from app.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetlim",
        description="Poset limits: densities, kernels, W-random posets and cut distance.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default=settings.log_level,
        choices=("TRACE", "DEBUG", "INFO", "WARNING", "ERROR"),
        type=str.upper,
        help="stderr log level",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=settings.threads,
        help="worker threads for replicates (POSETLIM_THREADS)",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="<command>", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser
