"""
Command Line Interface

``posetlim <subcommand>``; see :mod:`app.cli.commands` for the list.
"""

from app.cli.parser import build_parser

__all__ = ["build_parser"]
