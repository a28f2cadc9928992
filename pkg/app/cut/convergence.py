"""
Convergence experiment: P(n, W) approaches W in the cut distance.

For each size n and replicate, a W-random poset is drawn, turned into its
step kernel and compared with the target: cut-distance bounds, t_inj of the
2-chain, and the largest density gap over a small family of posets.
"""

from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.cut.distance import cut_distance_bounds
from app.cut.step_function import as_step_function
from app.densities.exact import t_inj_exact
from app.kernels.base import Kernel
from app.kernels.densities import t_kernel_exact_step
from app.kernels.step import step_from_poset
from app.models.results import ConvergeRow
from app.posets.poset import Poset, build_poset, chain_poset
from app.sampling.wposet import sample_wposet
from app.utils.streams import run_replicates, spawn_generators


def density_family() -> List[Poset]:
    """2-chain, 3-chain, one element below two, and two elements below one."""
    return [
        chain_poset(2),
        chain_poset(3),
        build_poset(3, [(1, 2), (1, 3)]),
        build_poset(3, [(1, 3), (2, 3)]),
    ]


def converge_experiment(
    W: Kernel,
    sizes: Sequence[int],
    reps: int,
    rng: np.random.Generator,
    restarts: Optional[int] = None,
    family: Optional[Sequence[Poset]] = None,
    max_parts: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[ConvergeRow]:
    """Rows ordered by size, then replicate.

    The coupling search of :func:`delta_cut_upper` runs whenever
    n * parts(W) <= ``settings.coupling_search_limit``; larger overlays get
    the spectral bound of the sorted coupling. A given ``max_parts`` applies
    to every size, and ``max_parts=0`` makes all rows spectral.
    """
    target = as_step_function(W)
    if reps < 1:
        raise ValidationError("reps must be at least 1", field="reps", value=reps)
    if not sizes or min(sizes) < 1:
        raise ValidationError("sizes must be positive", field="sizes", value=list(sizes))
    family = list(family) if family is not None else density_family()
    chain2 = chain_poset(2)
    limits = [t_kernel_exact_step(Q, W) for Q in family]
    tasks = [(n, rep) for n in sizes for rep in range(reps)]

    def run(index: int, gen: np.random.Generator) -> ConvergeRow:
        n, rep = tasks[index]
        P = sample_wposet(W, n, gen)
        parts = max_parts
        if parts is None and n * target.parts > settings.coupling_search_limit:
            parts = 0
        bounds = cut_distance_bounds(
            step_from_poset(P),
            target,
            restarts=restarts,
            rng=gen,
            threads=1,
            max_parts=parts,
        )
        gaps = [abs(float(t_inj_exact(Q, P)) - t) for Q, t in zip(family, limits)]
        return ConvergeRow(
            n=n,
            rep=rep,
            t_inj_estimate=float(t_inj_exact(chain2, P)),
            delta_upper=bounds.upper,
            delta_lower=bounds.lower,
            max_density_gap=max(gaps) if gaps else 0.0,
            method=bounds.method,
        )

    rows = run_replicates(run, spawn_generators(rng, len(tasks)), threads)
    logger.info("Convergence experiment: {} rows over sizes {}", len(rows), list(sizes))
    return rows
