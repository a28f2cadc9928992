"""
Sampling check of the kernel axioms.

For random triples (x, y, z) and every ordering of them:

    (w1)  W(x, y) > 0 implies x < y
    (w2)  W(x, y) > 0 and W(y, z) > 0 imply W(x, z) = 1

and the order itself must be irreflexive, asymmetric and transitive.
"""

from itertools import permutations
from typing import Dict, List, Optional

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.kernels.base import Kernel
from app.models.results import AxiomReport

MAX_WITNESSES = 10
_ORDERINGS = list(permutations(range(3)))


def _witnesses(points: np.ndarray, mask: np.ndarray) -> List[List[object]]:
    rows = np.flatnonzero(mask)[:MAX_WITNESSES]
    return [points[r].tolist() for r in rows]


def check_axioms(
    W: Kernel,
    triples: int,
    rng: np.random.Generator,
    tol: Optional[float] = None,
    chunk_size: Optional[int] = None,
) -> AxiomReport:
    """Count sampled triples that violate (w1), (w2) or the order axioms.

    ``tol`` defaults to 0 for kernels with exact values and to the user
    tolerance otherwise; a premise holds when W > tol and (w2) fails when
    W(x, z) < 1 - tol.
    """
    if triples < 1:
        raise ValidationError("triples must be at least 1", field="triples", value=triples)
    if tol is None:
        tol = 0.0 if W.exact else settings.axiom_tolerance_user
    if tol < 0:
        raise ValidationError("tol must be non-negative", field="tol", value=tol)
    chunk_size = chunk_size or settings.mc_chunk_size

    counts = {"w1": 0, "w2": 0, "order": 0}
    witnesses: Dict[str, List[List[object]]] = {"w1": [], "w2": [], "order": []}
    remaining = triples
    while remaining > 0:
        size = min(chunk_size, remaining)
        remaining -= size
        points = W.sample_block(rng, (size, 3))
        p = [points[:, i] for i in range(3)]
        less = [[W.less(p[a], p[b]) for b in range(3)] for a in range(3)]
        w = [[W.w(p[a], p[b]) for b in range(3)] for a in range(3)]

        bad = {key: np.zeros(size, dtype=bool) for key in counts}
        for a in range(3):
            bad["order"] |= less[a][a]
            for b in range(3):
                if a == b:
                    continue
                bad["order"] |= less[a][b] & less[b][a]
                bad["w1"] |= (w[a][b] > tol) & ~less[a][b]
        for a, b, c in _ORDERINGS:
            bad["order"] |= less[a][b] & less[b][c] & ~less[a][c]
            bad["w2"] |= (w[a][b] > tol) & (w[b][c] > tol) & (w[a][c] < 1 - tol)

        for key, mask in bad.items():
            counts[key] += int(mask.sum())
            room = MAX_WITNESSES - len(witnesses[key])
            if room > 0:
                witnesses[key].extend(_witnesses(points, mask)[:room])

    report = AxiomReport(
        triples_checked=triples,
        w1_violations=counts["w1"],
        w2_violations=counts["w2"],
        order_violations=counts["order"],
        witnesses={key: found for key, found in witnesses.items() if found},
    )
    logger.debug("Axiom check of {}: {}", W.name, report.model_dump())
    return report
