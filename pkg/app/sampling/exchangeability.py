"""
Exchangeability diagnostics for W-random posets.

The law of P(n, W) gives every labelling of a poset the same probability,
t_ind(Q, W). These checks compare empirical frequencies within each
isomorphism orbit, and test the independence of disjoint label blocks.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.densities.montecarlo import MomentAccumulator
from app.kernels.base import Kernel
from app.models.results import ExchangeabilityReport, IndependenceReport, OrbitDeviation
from app.posets.operations import all_labelled_posets, isomorphism_classes
from app.posets.poset import Poset
from app.sampling.wposet import sample_relations


@dataclass
class LabelDistribution:
    """Observed frequencies of labelled posets on 1..n, keyed by Poset.key()"""
    n: int
    counts: Dict[bytes, int] = field(default_factory=dict)
    posets: Dict[bytes, Poset] = field(default_factory=dict)
    total: int = 0

    def add(self, P: Poset, count: int = 1) -> None:
        key = P.key()
        self.posets.setdefault(key, P)
        self.counts[key] = self.counts.get(key, 0) + count
        self.total += count

    def count(self, P: Poset) -> int:
        return self.counts.get(P.key(), 0)

    def frequency(self, P: Poset) -> float:
        return self.count(P) / self.total if self.total else 0.0

    def items(self) -> Iterator[Tuple[Poset, int]]:
        for key, count in self.counts.items():
            yield self.posets[key], count


def _chunks(reps: int, chunk_size: Optional[int]) -> Iterator[int]:
    if reps < 1:
        raise ValidationError("reps must be at least 1", field="reps", value=reps)
    chunk_size = chunk_size or settings.mc_chunk_size
    remaining = reps
    while remaining > 0:
        size = min(chunk_size, remaining)
        remaining -= size
        yield size


def empirical_label_distribution(
    W: Kernel,
    n: int,
    reps: int,
    rng: np.random.Generator,
    chunk_size: Optional[int] = None,
) -> LabelDistribution:
    """Frequency table of ``reps`` independent draws of P(n, W)."""
    dist = LabelDistribution(n)
    for size in _chunks(reps, chunk_size):
        rel = sample_relations(W, n, size, rng)
        packed = np.packbits(rel.reshape(size, n * n), axis=1)
        codes, counts = np.unique(packed, axis=0, return_counts=True)
        for code, count in zip(codes, counts):
            bits = np.unpackbits(code)[: n * n].astype(bool)
            dist.add(Poset(n, bits.reshape(n, n)), int(count))
    logger.debug(
        "{} draws of P({}, {}): {} labelled posets seen", reps, n, W.name, len(dist.counts)
    )
    return dist


def orbit_check(
    dist: LabelDistribution, multiplier: Optional[float] = None
) -> ExchangeabilityReport:
    """Compare frequencies of the labellings of each unlabelled poset on 1..n.

    Two cells of one multinomial table differ with variance
    (p1 + p2 - (p1 - p2)^2) / total; the pair with the largest gap in
    standard errors is reported for each orbit.
    """
    multiplier = settings.stderr_multiplier if multiplier is None else multiplier
    if dist.total < 1:
        raise ValidationError("Distribution is empty", field="total", value=0)
    orbits = []
    for group in isomorphism_classes(all_labelled_posets(dist.n)):
        freqs = np.array([dist.frequency(P) for P in group])
        gaps = np.abs(freqs[:, None] - freqs[None, :])
        var = (freqs[:, None] + freqs[None, :] - gaps**2) / dist.total
        stderr = np.sqrt(np.maximum(var, 0.0))
        with np.errstate(divide="ignore", invalid="ignore"):
            z = np.where(gaps > 0, gaps / stderr, 0.0)
        i, j = np.unravel_index(int(np.argmax(z)), z.shape)
        orbits.append(
            OrbitDeviation(
                relations=[list(r) for r in group[0].relations()],
                labellings=len(group),
                max_gap=float(gaps[i, j]),
                stderr=float(stderr[i, j]),
            )
        )
    return ExchangeabilityReport(
        n=dist.n, replicates=dist.total, orbits=orbits, multiplier=multiplier
    )


def _contains(rel: np.ndarray, Q: Poset, offset: int) -> np.ndarray:
    """For each draw, whether the block offset+1..offset+|Q| contains Q."""
    ok = np.ones(rel.shape[0], dtype=bool)
    for i, j in np.argwhere(Q.rel):
        ok &= rel[:, offset + i, offset + j]
    return ok


def independence_test(
    W: Kernel,
    Q1: Poset,
    Q2: Poset,
    reps: int,
    rng: np.random.Generator,
    multiplier: Optional[float] = None,
    chunk_size: Optional[int] = None,
) -> IndependenceReport:
    """Compare P(R contains Q1 and Q2) with P(R contains Q1) P(R contains Q2).

    Q1 sits on labels 1..|Q1| and Q2 on the following block of a single draw
    R of P(|Q1| + |Q2|, W). The standard error of the difference is the
    delta-method one, from psi = AB - P(B) A - P(A) B.
    """
    multiplier = settings.stderr_multiplier if multiplier is None else multiplier
    n = Q1.n + Q2.n
    if n < 1:
        raise ValidationError("Q1 and Q2 are both empty", field="Q1", value=0)
    a_parts, b_parts = [], []
    for size in _chunks(reps, chunk_size):
        rel = sample_relations(W, n, size, rng)
        a_parts.append(_contains(rel, Q1, 0))
        b_parts.append(_contains(rel, Q2, Q1.n))
    a = np.concatenate(a_parts).astype(np.float64)
    b = np.concatenate(b_parts).astype(np.float64)

    left, right = float(a.mean()), float(b.mean())
    joint = float((a * b).mean())
    psi = a * b - right * a - left * b
    stderr = MomentAccumulator().add(psi).stderr
    return IndependenceReport(
        joint=joint,
        left=left,
        right=right,
        difference=joint - left * right,
        stderr=stderr,
        replicates=reps,
        multiplier=multiplier,
    )
