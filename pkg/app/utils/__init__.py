"""
Utilities Module

Seeded substreams and ordered replicate execution.
"""

from app.utils.streams import resolve_threads, run_replicates, spawn_generators, substream

__all__ = [
    "resolve_threads",
    "run_replicates",
    "spawn_generators",
    "substream",
]
