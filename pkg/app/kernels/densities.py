"""
Densities of posets and digraphs in kernels.

t(F, W) is the integral of the product of W(x_i, x_j) over the edges (i, j)
of F against independent points x_1..x_k; for a poset F the edges are its
relations.
"""

from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from app.cut.counting import t_digraph_step
from app.cut.step_function import StepFunction, as_step_function
from app.densities.montecarlo import accumulate
from app.kernels.base import Kernel
from app.models.results import DensityEstimate
from app.posets.poset import Poset

Edges = List[Tuple[int, int]]


def _edge_product(W: Kernel, k: int, edges: Edges):
    sources = np.array([i - 1 for i, _ in edges], dtype=np.intp)
    targets = np.array([j - 1 for _, j in edges], dtype=np.intp)

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        points = W.sample_block(rng, (size, k))
        product = np.ones(size)
        for i, j in zip(sources, targets):
            product *= W.w(points[:, i], points[:, j])
        return product

    return draw


def t_digraph_mc(
    k: int,
    edges: Iterable[Tuple[int, int]],
    W: Kernel,
    samples: int,
    rng: np.random.Generator,
    chunk_size: Optional[int] = None,
) -> DensityEstimate:
    """Monte-Carlo density of the digraph ([k], edges) in ``W``, edges 1-based."""
    edges = list(edges)
    if not edges:
        return DensityEstimate(value=1.0, stderr=0.0, samples=samples)
    return accumulate(_edge_product(W, k, edges), samples, rng, chunk_size).density()


def t_kernel_mc(
    Q: Poset,
    W: Kernel,
    samples: int,
    rng: np.random.Generator,
    chunk_size: Optional[int] = None,
) -> DensityEstimate:
    """Unbiased estimate of t(Q, W) from ``samples`` independent |Q|-tuples."""
    return t_digraph_mc(Q.n, Q.relations(), W, samples, rng, chunk_size)


def t_digraph_exact_step(
    k: int,
    edges: Iterable[Tuple[int, int]],
    W: Union[StepFunction, Kernel],
    budget: Optional[int] = None,
) -> float:
    return t_digraph_step(k, edges, as_step_function(W), budget)


def t_kernel_exact_step(
    Q: Poset, W: Union[StepFunction, Kernel], budget: Optional[int] = None
) -> float:
    """Exact t(Q, W) for a step kernel as a finite sum over part assignments."""
    return t_digraph_step(Q.n, Q.relations(), as_step_function(W), budget)
