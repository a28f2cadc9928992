"""
Logging setup.

The toolkit logs through ``loguru.logger``; the CLI installs a single stderr
sink at start-up.
"""

import sys
from typing import Optional

from loguru import logger

from app.core.config import settings


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Replace loguru's default sink with one stderr sink at the given level."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=(level or settings.log_level).upper(),
        format=fmt or settings.log_format,
        backtrace=False,
        diagnose=False,
    )
