"""
Exact Homomorphism Densities

Counts order-preserving maps Q -> P by backtracking over partial maps. The
vertices of Q are assigned in a topological order and a whole level of partial
maps is extended at once with numpy; candidate images that break a required
relation are pruned before the next level.
"""

from enum import Enum
from fractions import Fraction
from math import perm
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import BudgetExceededError
from app.posets.poset import Poset, comparable_mask, topological_order


class MapKind(str, Enum):
    """Which maps are counted and which condition they must meet"""
    HOM = "hom"  # all maps, i <_Q j implies f(i) <_P f(j)
    INJ = "inj"  # injective maps, same condition
    IND = "ind"  # injective maps, i <_Q j iff f(i) <_P f(j)


# Relation of an earlier vertex u to the vertex v being placed
_BELOW, _ABOVE, _APART = 0, 1, 2


def _plan(Q: Poset, order: List[int]) -> List[List[Tuple[int, int]]]:
    """For each position, (earlier position, relation) constraints."""
    plan = []
    for t, v in enumerate(order):
        steps = []
        for s, u in enumerate(order[:t]):
            if Q.rel[u, v]:
                steps.append((s, _BELOW))
            elif Q.rel[v, u]:
                steps.append((s, _ABOVE))
            else:
                steps.append((s, _APART))
        plan.append(steps)
    return plan


class _MapCounter:
    """Level-synchronous enumeration of partial maps with pruning"""

    def __init__(self, Q: Poset, P: Poset, kind: MapKind, frontier_limit: int):
        self.kind = kind
        self.rel = P.rel
        self.size = P.n
        self.depth = Q.n
        self.plan = _plan(Q, topological_order(Q))
        # Rows of the frontier held per step, so that rows x |P| stays bounded
        self.chunk = max(1, frontier_limit // max(1, self.size))

    def _allowed(self, frontier: np.ndarray, t: int) -> np.ndarray:
        rows = frontier.shape[0]
        allowed = np.ones((rows, self.size), dtype=bool)
        injective = self.kind is not MapKind.HOM
        for s, relation in self.plan[t]:
            images = frontier[:, s]
            if relation == _BELOW:
                allowed &= self.rel[images]
            elif relation == _ABOVE:
                allowed &= self.rel[:, images].T
            elif self.kind is MapKind.IND:
                allowed &= ~(self.rel[images] | self.rel[:, images].T)
            if injective:
                allowed[np.arange(rows), images] = False
        return allowed

    def count(self) -> int:
        if self.depth == 0:
            return 1
        return self._count(np.zeros((1, 0), dtype=np.intp), 0)

    def _count(self, frontier: np.ndarray, t: int) -> int:
        total = 0
        for start in range(0, frontier.shape[0], self.chunk):
            block = frontier[start : start + self.chunk]
            allowed = self._allowed(block, t)
            if t == self.depth - 1:
                total += int(allowed.sum())
                continue
            rows, images = np.nonzero(allowed)
            if rows.size == 0:
                continue
            grown = np.column_stack([block[rows], images])
            total += self._count(grown, t + 1)
        return total


def _map_total(q: int, p: int, kind: MapKind) -> int:
    return p**q if kind is MapKind.HOM else perm(p, q)


def count_maps(
    Q: Poset,
    P: Poset,
    kind: MapKind = MapKind.HOM,
    *,
    budget: Optional[int] = None,
    frontier_limit: Optional[int] = None,
) -> Tuple[int, int]:
    """Return (good maps, all maps) of the given kind from Q to P.

    Raises:
        BudgetExceededError: If the number of maps to consider exceeds ``budget``.
    """
    kind = MapKind(kind)
    budget = settings.enumeration_budget if budget is None else budget
    frontier_limit = settings.frontier_limit if frontier_limit is None else frontier_limit

    total = _map_total(Q.n, P.n, kind)
    if kind is not MapKind.HOM and Q.n > P.n:
        return 0, total

    work = Q
    if kind is MapKind.HOM:
        # Isolated elements of Q may go anywhere
        keep = np.flatnonzero(comparable_mask(Q))
        work = Poset(len(keep), Q.rel[np.ix_(keep, keep)])

    bound = _map_total(work.n, P.n, kind)
    if bound > budget:
        raise BudgetExceededError(
            f"Exact count needs {bound} maps, budget is {budget}",
            bound=bound,
            limit=budget,
        )

    good = _MapCounter(work, P, kind, frontier_limit).count()
    good *= P.n ** (Q.n - work.n)
    logger.debug("{} maps {} -> {}: {} of {}", kind.value, Q.n, P.n, good, total)
    return good, total


def _density(Q: Poset, P: Poset, kind: MapKind, **kwargs) -> Fraction:
    good, total = count_maps(Q, P, kind, **kwargs)
    if total == 0:
        return Fraction(1) if Q.n == 0 else Fraction(0)
    return Fraction(good, total)


def t_exact(Q: Poset, P: Poset, **kwargs) -> Fraction:
    """Fraction of all maps Q -> P that preserve the strict order."""
    return _density(Q, P, MapKind.HOM, **kwargs)


def t_inj_exact(Q: Poset, P: Poset, **kwargs) -> Fraction:
    """Fraction of injective maps Q -> P that preserve the order; 0 when |Q| > |P|."""
    return _density(Q, P, MapKind.INJ, **kwargs)


def t_ind_exact(Q: Poset, P: Poset, **kwargs) -> Fraction:
    """Fraction of injective maps under which Q is the induced order; 0 when |Q| > |P|."""
    return _density(Q, P, MapKind.IND, **kwargs)
