"""
Ordered probability spaces and kernels.

Points are float arrays whose trailing axes have the space's ``point_shape``;
``less`` and ``w`` broadcast over all leading axes, so a block of pairs is
evaluated in one call. Points are private to their space and are never
compared across kernels.
"""

from abc import ABC, abstractmethod
from typing import Callable, Optional, Tuple

import numpy as np

PointSampler = Callable[[np.random.Generator, int], np.ndarray]
PairFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


class OrderedSpace(ABC):
    """Probability space with a strict partial order, known through a sampler"""

    point_shape: Tuple[int, ...] = ()

    @abstractmethod
    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """``size`` independent points, shape (size, *point_shape)."""

    @abstractmethod
    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Elementwise x < y in the order of the space."""

    def sample_block(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        """Points filling ``shape``, drawn in C order."""
        count = int(np.prod(shape, dtype=np.int64))
        return self.sample(rng, count).reshape(tuple(shape) + self.point_shape)


class UnitInterval(OrderedSpace):
    """[0, 1] with Lebesgue measure and the standard order"""

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.random(size)

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.less(x, y)


class UnitSquare(OrderedSpace):
    """[0, 1]^2 with the product (coordinatewise) order"""

    point_shape = (2,)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.random((size, 2))

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return (x[..., 0] < y[..., 0]) & (x[..., 1] < y[..., 1])


def sorted_uniform_pair(rng: np.random.Generator, size: int) -> np.ndarray:
    """Intervals [min(U, V), max(U, V)] of two independent uniforms."""
    return np.sort(rng.random((size, 2)), axis=1)


class IntervalSpace(OrderedSpace):
    """Closed intervals [a, b]; one precedes another when it lies entirely to its left"""

    point_shape = (2,)

    def __init__(self, sampler: Optional[PointSampler] = None):
        self.sampler = sampler or sorted_uniform_pair

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        points = np.asarray(self.sampler(rng, size), dtype=np.float64)
        if points.shape != (size, 2):
            raise ValueError(f"Interval sampler returned shape {points.shape}")
        return points

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return x[..., 1] < y[..., 0]


class PartSpace(OrderedSpace):
    """Finite set of parts with masses and a strict order; points are part indices"""

    def __init__(self, mass: np.ndarray, order: np.ndarray):
        self.mass = np.asarray(mass, dtype=np.float64)
        self.order = np.asarray(order, dtype=bool)
        self._cumulative = np.cumsum(self.mass)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        parts = np.searchsorted(self._cumulative, rng.random(size), side="right")
        return np.minimum(parts, self.mass.size - 1).astype(np.float64)

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.order[np.asarray(x, dtype=np.intp), np.asarray(y, dtype=np.intp)]


class Kernel(ABC):
    """Kernel W on an ordered probability space.

    Subclasses provide ``w``. ``exact`` is True when ``w`` returns exact
    0/1/p values, so the kernel axioms can be checked with zero tolerance.
    """

    exact: bool = True

    def __init__(self, space: OrderedSpace, name: str):
        self.space = space
        self.name = name

    @property
    def point_shape(self) -> Tuple[int, ...]:
        return self.space.point_shape

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.space.sample(rng, size)

    def sample_block(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        return self.space.sample_block(rng, shape)

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.space.less(x, y)

    @abstractmethod
    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Elementwise W(x, y) in [0, 1]."""

    def pairwise(self, points: np.ndarray, axis: int = 0) -> np.ndarray:
        """W(X_i, X_j) for all i, j along ``axis`` of a point block."""
        x = np.expand_dims(points, axis + 1)
        y = np.expand_dims(points, axis)
        return self.w(x, y)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class IndicatorKernel(Kernel):
    """Strict kernel W(x, y) = 1{x < y} of an ordered space"""

    def __init__(self, space: OrderedSpace, name: str = "indicator"):
        super().__init__(space, name)

    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.space.less(x, y).astype(np.float64)


class FunctionKernel(Kernel):
    """Kernel given by an arbitrary function of two points.

    Nothing is assumed about ``func``: this is how candidate limits that may
    fail the kernel axioms are handed to the checks.
    """

    exact = False

    def __init__(self, space: OrderedSpace, func: PairFunction, name: str = "function"):
        super().__init__(space, name)
        self.func = func

    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        shape = np.broadcast_shapes(
            x.shape[: x.ndim - len(self.point_shape)],
            y.shape[: y.ndim - len(self.point_shape)],
        )
        return np.broadcast_to(np.asarray(self.func(x, y), dtype=np.float64), shape)
