"""
Seeded random substreams and ordered parallel replicates.

Every replicate ``index`` of a run seeded with ``seed`` draws from
``default_rng([seed, index])``, so results do not depend on how replicates
are scheduled across workers.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from loguru import logger

from app.core.config import settings

T = TypeVar("T")


def substream(seed: int, index: int) -> np.random.Generator:
    """Generator for replicate ``index`` of a run seeded with ``seed``."""
    return np.random.default_rng([int(seed), int(index)])


def spawn_generators(rng: np.random.Generator, count: int) -> List[np.random.Generator]:
    """Independent child generators, created up front in index order."""
    return list(rng.spawn(count))


def resolve_threads(threads: Optional[int] = None) -> int:
    return max(1, int(threads if threads is not None else settings.threads))


def run_replicates(
    task: Callable[[int, np.random.Generator], T],
    generators: Sequence[np.random.Generator],
    threads: Optional[int] = None,
) -> List[T]:
    """Run ``task(index, rng)`` for every generator; results come back in index order."""
    workers = min(resolve_threads(threads), max(1, len(generators)))
    if workers == 1:
        return [task(i, gen) for i, gen in enumerate(generators)]

    logger.debug("Running {} replicates on {} threads", len(generators), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(task, i, gen) for i, gen in enumerate(generators)]
        return [future.result() for future in futures]
