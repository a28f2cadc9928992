"""
Built-in kernels.

Each builder returns a fresh, immutable kernel:

    two_point(p)      W(0, 1) = p on the uniform two-point space 0 < 1
    from_poset(P)     1{x <_P y} with uniform mass on the elements of P
    total_unit()      1{x < y} on [0, 1]; every sample is a total order
    trivial()         W = 0; every sample is an antichain
    product2d()       1{x < y} in the product order of [0, 1]^2
    interval(s)       1{x lies entirely left of y} for random intervals
    threshold(a)      1{y - x > 1/a} on [0, 1], identically 0 for a <= 1
    indicator(space)  1{x < y} on any ordered space
"""

import math
from typing import Optional

import numpy as np

from app.core.exceptions import ParameterRangeError
from app.kernels.base import (
    IndicatorKernel,
    IntervalSpace,
    Kernel,
    OrderedSpace,
    PointSampler,
    UnitInterval,
    UnitSquare,
)
from app.kernels.step import StepKernel, step_from_poset
from app.posets.poset import Poset


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParameterRangeError(
            f"{name} must lie in [0, 1], got {value}", field=name, value=value
        )
    return value


def two_point(p: float) -> StepKernel:
    p = _check_probability("p", p)
    return StepKernel(
        mass=np.array([0.5, 0.5]),
        values=np.array([[0.0, p], [0.0, 0.0]]),
        order=np.array([[False, True], [False, False]]),
        name=f"two_point:{p:g}",
    )


def from_poset(P: Poset) -> StepKernel:
    return step_from_poset(P)


def total_unit() -> IndicatorKernel:
    # Uniform floats on [0, 1] collide with probability about n^2 * 2^-53
    return IndicatorKernel(UnitInterval(), name="total")


def trivial() -> StepKernel:
    return StepKernel(
        mass=np.array([1.0]),
        values=np.zeros((1, 1)),
        order=np.zeros((1, 1), dtype=bool),
        name="trivial",
    )


def product2d() -> IndicatorKernel:
    return IndicatorKernel(UnitSquare(), name="product2d")


def interval(sampler: Optional[PointSampler] = None) -> IndicatorKernel:
    return IndicatorKernel(IntervalSpace(sampler), name="interval")


class ThresholdKernel(Kernel):
    """W_a(x, y) = 1{y - x > 1/a} on [0, 1] with the standard order"""

    def __init__(self, a: float):
        a = float(a)
        if not a > 0 or math.isnan(a):
            raise ParameterRangeError(f"a must lie in (0, inf], got {a}", field="a", value=a)
        super().__init__(UnitInterval(), name=f"threshold:{a:g}")
        self.a = a
        self.gap = 0.0 if math.isinf(a) else 1.0 / a

    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return (np.subtract(y, x) > self.gap).astype(np.float64)


def threshold(a: float) -> ThresholdKernel:
    return ThresholdKernel(a)


def indicator(space: OrderedSpace) -> IndicatorKernel:
    return IndicatorKernel(space)
