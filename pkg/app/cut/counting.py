"""
Exact homomorphism densities of finite digraphs in step functions.

For a digraph on vertices 1..k the density in a step function is

    sum over c: [k] -> parts of  prod_i mass[c_i] * prod_(i,j) values[c_i, c_j],

evaluated as a single tensor contraction.
"""

import string
from typing import Iterable, Optional, Tuple

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, ValidationError
from app.cut.step_function import StepFunction

_LETTERS = string.ascii_letters


def t_digraph_step(
    k: int,
    edges: Iterable[Tuple[int, int]],
    F: StepFunction,
    budget: Optional[int] = None,
) -> float:
    """Density of the digraph ([k], edges) in ``F``; edges are 1-based.

    Raises:
        BudgetExceededError: If parts**k exceeds ``budget``.
    """
    edges = list(edges)
    if k > len(_LETTERS):
        raise ValidationError(f"At most {len(_LETTERS)} vertices", field="k", value=k)
    if k == 0:
        return 1.0
    budget = settings.enumeration_budget if budget is None else budget
    bound = F.parts**k
    if bound > budget:
        raise BudgetExceededError(
            f"Exact step density needs {bound} assignments, budget is {budget}",
            bound=bound,
            limit=budget,
        )

    subscripts = [_LETTERS[v] for v in range(k)]
    operands = [F.mass] * k
    for i, j in edges:
        if not (1 <= i <= k and 1 <= j <= k):
            raise ValidationError(f"Edge ({i}, {j}) outside 1..{k}", field="edges")
        subscripts.append(_LETTERS[i - 1] + _LETTERS[j - 1])
        operands.append(F.values)
    expression = ",".join(subscripts) + "->"
    logger.trace("einsum {}", expression)
    return float(np.einsum(expression, *operands, optimize=True))
