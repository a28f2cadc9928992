"""
Poset Limits Toolkit - command-line entry point.
"""

import sys
from typing import List, Optional

from loguru import logger

from app.cli.parser import build_parser
from app.core.exceptions import PosetLimitError
from app.core.logging import configure_logging


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; 0 on success, 1 on a domain error, 2 on a usage error."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = ["posetlim", *argv]
    configure_logging(args.log_level)
    if args.threads < 1:
        parser.error("--threads must be at least 1")

    try:
        return int(args.handler(args))
    except PosetLimitError as e:
        logger.debug("{}: {}", type(e).__name__, e.details)
        print(f"posetlim: error: {e.message}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"posetlim: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
