"""
Cut norms of step functions.

Both norms are attained on unions of parts, so they reduce to finite
maximisations over the weighted matrix A[i, j] = values[i, j] mass[i] mass[j]:

    rectangular   max over S, T of |sum_{i in S, j in T} A[i, j]|
    functional    max over f, g in {-1, +1}^N of |f^T A g|

S (or f) is enumerated over all 2^N choices in blocks; the best T (or g) for
a given S follows from the signs of the column sums. Ties go to the smallest
bitmask.
"""

from typing import List, NamedTuple, Optional

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import BudgetExceededError
from app.cut.step_function import StepFunction

_BLOCK = 1 << 16


class CutWitness(NamedTuple):
    """Maximising part sets of the rectangular cut norm (0-based parts)"""
    value: float
    rows: List[int]
    cols: List[int]
    sign: int  # +1 if the box integral is positive at the optimum


def _check_parts(parts: int, max_parts: Optional[int]) -> None:
    limit = settings.cut_norm_max_parts if max_parts is None else max_parts
    if parts > limit:
        raise BudgetExceededError(
            f"Exact cut norm over {parts} parts exceeds the limit of {limit}",
            bound=parts,
            limit=limit,
        )


def _mask_bits(start: int, stop: int, parts: int) -> np.ndarray:
    masks = np.arange(start, stop, dtype=np.int64)
    return ((masks[:, None] >> np.arange(parts, dtype=np.int64)) & 1).astype(np.float64)


def rect_from_weighted(A: np.ndarray, max_parts: Optional[int] = None) -> CutWitness:
    """Rectangular cut norm of a weighted part matrix, with its maximisers."""
    parts = A.shape[0]
    _check_parts(parts, max_parts)
    best, best_mask, best_sign = -1.0, 0, 1
    for start in range(0, 1 << parts, _BLOCK):
        bits = _mask_bits(start, min(1 << parts, start + _BLOCK), parts)
        sums = bits @ A
        positive = np.clip(sums, 0.0, None).sum(axis=1)
        negative = np.clip(-sums, 0.0, None).sum(axis=1)
        values = np.maximum(positive, negative)
        k = int(np.argmax(values))
        if values[k] > best:
            best = float(values[k])
            best_mask = start + k
            best_sign = 1 if positive[k] >= negative[k] else -1

    rows = [i for i in range(parts) if (best_mask >> i) & 1]
    col_sums = A[rows].sum(axis=0) if rows else np.zeros(parts)
    cols = [j for j in range(parts) if best_sign * col_sums[j] > 0]
    return CutWitness(value=best, rows=rows, cols=cols, sign=best_sign)


def func_from_weighted(A: np.ndarray, max_parts: Optional[int] = None) -> float:
    parts = A.shape[0]
    _check_parts(parts, max_parts)
    best = 0.0
    for start in range(0, 1 << parts, _BLOCK):
        signs = 2.0 * _mask_bits(start, min(1 << parts, start + _BLOCK), parts) - 1.0
        best = max(best, float(np.abs(signs @ A).sum(axis=1).max()))
    return best


def cut_norm_rect(F: StepFunction, max_parts: Optional[int] = None) -> float:
    """Exact rectangular cut norm.

    Raises:
        BudgetExceededError: If F has more parts than ``max_parts``.
    """
    return rect_from_weighted(F.weighted(), max_parts).value


def cut_norm_rect_witness(F: StepFunction, max_parts: Optional[int] = None) -> CutWitness:
    return rect_from_weighted(F.weighted(), max_parts)


def cut_norm_func(F: StepFunction, max_parts: Optional[int] = None) -> float:
    """Exact functional cut norm (sup over |f|, |g| <= 1 of |integral f F g|)."""
    return func_from_weighted(F.weighted(), max_parts)


def spectral_bound(values: np.ndarray, mass: np.ndarray) -> float:
    """Upper bound on the rectangular cut norm: min of the L1 norm and the
    spectral norm of diag(sqrt m) V diag(sqrt m)."""
    root = np.sqrt(mass)
    scaled = values * np.outer(root, root)
    l1 = float(np.abs(values * np.outer(mass, mass)).sum())
    bound = min(l1, float(np.linalg.norm(scaled, ord=2)))
    logger.trace("spectral cut-norm bound {:.6g} over {} parts", bound, mass.size)
    return bound
