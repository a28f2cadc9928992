"""
Monte-Carlo Homomorphism Densities

Estimates of t(Q, P) from uniformly random maps, the induced-subposet sampler,
and the running moment accumulator shared by every Monte-Carlo estimator.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import SizeError, ValidationError
from app.models.results import DensityEstimate, Statistic
from app.posets.poset import Poset
from app.utils.streams import run_replicates, substream


@dataclass
class MomentAccumulator:
    """Streaming mean and sum of squared deviations (Chan's merge)."""
    count: int = 0
    mean: float = 0.0
    m2: float = 0.0

    def add(self, values: np.ndarray) -> "MomentAccumulator":
        values = np.asarray(values, dtype=np.float64).ravel()
        if values.size == 0:
            return self
        block_mean = float(values.mean())
        block_m2 = float(((values - block_mean) ** 2).sum())
        return self.merge(MomentAccumulator(values.size, block_mean, block_m2))

    def merge(self, other: "MomentAccumulator") -> "MomentAccumulator":
        if other.count == 0:
            return self
        if self.count == 0:
            self.count, self.mean, self.m2 = other.count, other.mean, other.m2
            return self
        count = self.count + other.count
        delta = other.mean - self.mean
        self.mean += delta * other.count / count
        self.m2 += other.m2 + delta * delta * self.count * other.count / count
        self.count = count
        return self

    @property
    def stderr(self) -> float:
        if self.count < 2:
            return 0.0
        return float(np.sqrt(self.m2 / (self.count - 1) / self.count))

    def statistic(self) -> Statistic:
        return Statistic(value=self.mean, stderr=self.stderr, samples=self.count)

    def density(self) -> DensityEstimate:
        # Floating error can push a mean of [0, 1] values just outside the range
        value = min(1.0, max(0.0, self.mean))
        return DensityEstimate(value=value, stderr=self.stderr, samples=self.count)


def accumulate(
    draw: Callable[[np.random.Generator, int], np.ndarray],
    samples: int,
    rng: np.random.Generator,
    chunk_size: Optional[int] = None,
) -> MomentAccumulator:
    """Feed ``draw(rng, size)`` blocks of at most ``chunk_size`` into an accumulator."""
    if samples < 1:
        raise ValidationError("samples must be at least 1", field="samples", value=samples)
    chunk_size = chunk_size or settings.mc_chunk_size
    acc = MomentAccumulator()
    remaining = samples
    while remaining > 0:
        size = min(chunk_size, remaining)
        acc.add(draw(rng, size))
        remaining -= size
    return acc


def _map_indicator(Q: Poset, P: Poset) -> Callable[[np.random.Generator, int], np.ndarray]:
    if P.n == 0 and Q.n > 0:
        raise ValidationError("Target poset is empty", field="P", value=0)
    pairs = np.argwhere(Q.rel)

    def draw(rng: np.random.Generator, size: int) -> np.ndarray:
        images = rng.integers(0, P.n, size=(size, Q.n)) if Q.n else np.zeros((size, 0), int)
        ok = np.ones(size, dtype=bool)
        for i, j in pairs:
            ok &= P.rel[images[:, i], images[:, j]]
        return ok

    return draw


def t_mc(
    Q: Poset,
    P: Poset,
    samples: int,
    rng: np.random.Generator,
    chunk_size: Optional[int] = None,
) -> DensityEstimate:
    """Estimate t(Q, P) from ``samples`` uniformly random maps."""
    acc = accumulate(_map_indicator(Q, P), samples, rng, chunk_size)
    return acc.density()


def t_mc_partitioned(
    Q: Poset,
    P: Poset,
    samples: int,
    seed: int,
    parts: int,
    threads: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> DensityEstimate:
    """t_mc split into ``parts`` substreams; merged in part order.

    The result depends on ``seed`` and ``parts`` but not on ``threads``.
    """
    if parts < 1 or parts > samples:
        raise ValidationError("parts must lie in 1..samples", field="parts", value=parts)
    draw = _map_indicator(Q, P)
    sizes = [samples // parts + (1 if k < samples % parts else 0) for k in range(parts)]

    def task(index: int, gen: np.random.Generator) -> MomentAccumulator:
        return accumulate(draw, sizes[index], gen, chunk_size)

    generators = [substream(seed, k) for k in range(parts)]
    merged = MomentAccumulator()
    for part in run_replicates(task, generators, threads):
        merged.merge(part)
    logger.debug("Merged {} partitions of t_mc", parts)
    return merged.density()


class SamplingMode(str, Enum):
    WITH = "with-replacement"
    WITHOUT = "without-replacement"


def sample_induced(
    P: Poset,
    k: int,
    mode: SamplingMode,
    rng: np.random.Generator,
) -> Poset:
    """The labelled poset P(v_1, ..., v_k) on randomly drawn elements v_i.

    With replacement a repeated element yields incomparable copies.

    Raises:
        SizeError: If ``k`` exceeds |P| without replacement.
    """
    mode = SamplingMode(mode)
    if k < 0:
        raise ValidationError("k must be non-negative", field="k", value=k)
    if k == 0:
        return Poset(0, np.zeros((0, 0), dtype=bool))
    if mode is SamplingMode.WITHOUT:
        if k > P.n:
            raise SizeError(f"Cannot draw {k} distinct elements from {P.n}")
        picks = rng.choice(P.n, size=k, replace=False)
    else:
        if P.n == 0 and k > 0:
            raise SizeError("Cannot draw from an empty poset")
        picks = rng.integers(0, P.n, size=k)
    return Poset(k, P.rel[np.ix_(picks, picks)])
