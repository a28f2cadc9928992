"""
Poset-limit criterion.

A candidate W (any evaluator of W(x, y), no order assumed) represents a poset
limit when t(D1, W) = t(D2, W) and t(D3, W) = 0, where D1 is the path 12, 23,
D2 the chain 12, 23, 13 and D3 the cycle 12, 23, 31. t(D1) - t(D2) is
estimated directly as the mean of W12 W23 (1 - W13) on the same triples.
"""

from typing import Optional, Union

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.constants import SPECIAL_DIGRAPHS
from app.core.exceptions import ValidationError
from app.cut.counting import t_digraph_step
from app.cut.step_function import StepFunction
from app.densities.montecarlo import MomentAccumulator
from app.kernels.base import Kernel
from app.models.results import PosetLimitReport, Statistic


def _exact_report(F: StepFunction, multiplier: float) -> PosetLimitReport:
    def exact(name: str) -> Statistic:
        spec = SPECIAL_DIGRAPHS[name]
        value = t_digraph_step(spec.n, spec.edges, F)
        return Statistic(value=value, stderr=0.0, samples=0)

    d1, d2, d3 = exact("D1"), exact("D2"), exact("D3")
    gap = Statistic(value=d1.value - d2.value, stderr=0.0, samples=0)
    return PosetLimitReport(
        d1=d1, d2=d2, d1_minus_d2=gap, d3=d3, exact=True, multiplier=multiplier
    )


def poset_limit_test(
    W: Union[StepFunction, Kernel],
    samples: int,
    rng: np.random.Generator,
    multiplier: Optional[float] = None,
    chunk_size: Optional[int] = None,
    exact: bool = True,
) -> PosetLimitReport:
    """Estimate t(D1), t(D2), t(D1) - t(D2) and t(D3) for a candidate limit.

    Plain step functions (and step kernels when ``exact``) are evaluated
    exactly; anything else is sampled on ``samples`` independent triples.
    """
    multiplier = settings.stderr_multiplier if multiplier is None else multiplier
    if isinstance(W, StepFunction):
        return _exact_report(W, multiplier)
    function = getattr(W, "function", None)
    if exact and isinstance(function, StepFunction):
        return _exact_report(function, multiplier)

    if samples < 1:
        raise ValidationError("samples must be at least 1", field="samples", value=samples)
    chunk_size = chunk_size or settings.mc_chunk_size
    acc = {key: MomentAccumulator() for key in ("d1", "d2", "gap", "d3")}
    remaining = samples
    while remaining > 0:
        size = min(chunk_size, remaining)
        remaining -= size
        points = W.sample_block(rng, (size, 3))
        x, y, z = points[:, 0], points[:, 1], points[:, 2]
        path = W.w(x, y) * W.w(y, z)
        w13 = W.w(x, z)
        acc["d1"].add(path)
        acc["d2"].add(path * w13)
        acc["gap"].add(path * (1.0 - w13))
        acc["d3"].add(path * W.w(z, x))

    report = PosetLimitReport(
        d1=acc["d1"].statistic(),
        d2=acc["d2"].statistic(),
        d1_minus_d2=acc["gap"].statistic(),
        d3=acc["d3"].statistic(),
        exact=False,
        multiplier=multiplier,
    )
    logger.debug(
        "Poset-limit test of {}: D1-D2={:.3g} D3={:.3g}",
        getattr(W, "name", W),
        report.d1_minus_d2.value,
        report.d3.value,
    )
    return report
