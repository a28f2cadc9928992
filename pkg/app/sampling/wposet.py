"""
W-random posets.

P(n, W) draws points X_1..X_n from the space of W and independent uniforms
xi_ij for every ordered pair i != j, and sets i < j iff xi_ij < W(X_i, X_j).

Consumption order for a single draw: two child streams are taken from the
caller's generator, one for the points and one for the thresholds. Points are
drawn X_1, X_2, ... in order. Thresholds are drawn shell by shell: every pair
inside 1..m comes before any pair involving m + 1, and shell m + 1 lists
(m+1, 1..m) before (1..m, m+1). A draw on n elements therefore restricts to
the draw on its first k elements under the same seed.
"""

from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from app.core.exceptions import NotAPosetError, ParameterRangeError, ValidationError
from app.densities.exact import t_inj_exact
from app.densities.montecarlo import MomentAccumulator
from app.kernels.base import Kernel
from app.models.results import Statistic
from app.posets.poset import Poset, is_strict_order, transitive_closure
from app.utils.streams import run_replicates, spawn_generators


def shell_positions(n: int) -> np.ndarray:
    """Index into the threshold stream of each ordered pair (diagonal is -1)."""
    i, j = np.indices((n, n))
    shell = np.maximum(i, j)
    positions = shell * (shell - 1) + np.where(i == shell, j, shell + i)
    positions[np.diag_indices(n)] = -1
    return positions


def _thresholds(rng: np.random.Generator, n: int) -> np.ndarray:
    stream = rng.random(n * (n - 1))
    xi = np.ones((n, n))
    positions = shell_positions(n)
    off = positions >= 0
    xi[off] = stream[positions[off]]
    return xi


def _validated(rel: np.ndarray, kernel: Kernel) -> Poset:
    if not is_strict_order(rel):
        raise NotAPosetError(
            f"Sample of {kernel.name} is not a partial order; the kernel breaks (w1) or (w2)",
            details={"kernel": kernel.name, "n": int(rel.shape[0])},
        )
    return Poset(rel.shape[0], rel)


def sample_wposet(W: Kernel, n: int, rng: np.random.Generator) -> Poset:
    """One draw of P(n, W).

    Raises:
        NotAPosetError: If the sampled relation is not a strict order.
    """
    if n < 1:
        raise ValidationError("n must be at least 1", field="n", value=n)
    point_rng, threshold_rng = spawn_generators(rng, 2)
    points = W.sample(point_rng, n)
    weights = W.pairwise(points)
    rel = _thresholds(threshold_rng, n) < weights
    return _validated(rel, W)


def sample_relations(
    W: Kernel, n: int, reps: int, rng: np.random.Generator
) -> np.ndarray:
    """``reps`` independent draws of P(n, W) as a (reps, n, n) boolean array.

    Consumes ``rng`` in one block (all points, then all thresholds), so the
    prefix property of :func:`sample_wposet` does not hold here.
    """
    points = W.sample_block(rng, (reps, n))
    weights = W.pairwise(points, axis=1)
    xi = rng.random((reps, n, n))
    rel = xi < weights
    rel[:, np.arange(n), np.arange(n)] = False
    if not batch_is_strict_order(rel).all():
        raise NotAPosetError(
            f"Sample of {W.name} is not a partial order; the kernel breaks (w1) or (w2)",
            details={"kernel": W.name, "n": n},
        )
    return rel


def batch_is_strict_order(rel: np.ndarray) -> np.ndarray:
    """Order-axiom check for each matrix of a (reps, n, n) stack."""
    n = rel.shape[-1]
    loops = rel[:, np.arange(n), np.arange(n)].any(axis=1)
    double = (rel & np.swapaxes(rel, 1, 2)).any(axis=(1, 2))
    as_int = rel.astype(np.int32)
    two_step = np.matmul(as_int, as_int) > 0
    open_paths = (two_step & ~rel).any(axis=(1, 2))
    return ~(loops | double | open_paths)


def gnp_order(n: int, p: float, rng: np.random.Generator) -> Poset:
    """Random graph order: G(n, p) oriented upward by label, transitively closed."""
    if n < 1:
        raise ValidationError("n must be at least 1", field="n", value=n)
    if not 0.0 <= p <= 1.0:
        raise ParameterRangeError(f"p must lie in [0, 1], got {p}", field="p", value=p)
    edges = np.triu(rng.random((n, n)) < p, 1)
    logger.debug("gnp_order n={} p={:.4g}: {} edges", n, p, int(edges.sum()))
    return Poset(n, transitive_closure(edges))


def t_inj_mean_over_samples(
    Q: Poset,
    W: Kernel,
    n: int,
    reps: int,
    rng: np.random.Generator,
    threads: Optional[int] = None,
) -> Tuple[Statistic, List[float]]:
    """Mean of t_inj(Q, P(n, W)) over ``reps`` draws, and the per-draw values."""
    if reps < 1:
        raise ValidationError("reps must be at least 1", field="reps", value=reps)

    def task(index: int, gen: np.random.Generator) -> float:
        return float(t_inj_exact(Q, sample_wposet(W, n, gen)))

    values = run_replicates(task, spawn_generators(rng, reps), threads)
    acc = MomentAccumulator().add(np.asarray(values))
    return acc.statistic(), values
