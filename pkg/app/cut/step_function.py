"""
Finite-type functions on a partitioned probability space.

A StepFunction is constant on each product A_i x A_j of parts with masses
``mass[i]``; values are arbitrary reals so that differences of kernels are
step functions too.
"""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from app.core.exceptions import SizeMismatchError, ValidationError
from app.models.documents import StepFunctionDocument

MASS_TOLERANCE = 1e-12


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class StepFunction:
    """Values on part pairs of a finite partition with masses summing to 1"""
    mass: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        mass = np.array(self.mass, dtype=np.float64).ravel()
        values = np.array(self.values, dtype=np.float64)
        size = mass.size
        if size == 0:
            raise ValidationError("A step function needs at least one part", field="mass")
        if values.shape != (size, size):
            raise ValidationError(
                f"values must be {size}x{size}, got {values.shape}",
                field="values",
                value=values.shape,
            )
        if (mass < 0).any():
            raise ValidationError("Part masses must be non-negative", field="mass")
        if abs(mass.sum() - 1.0) > MASS_TOLERANCE * max(1, size):
            raise ValidationError(
                f"Part masses sum to {mass.sum()!r}, expected 1",
                field="mass",
                value=float(mass.sum()),
            )
        if not np.isfinite(values).all():
            raise ValidationError("values must be finite", field="values")
        object.__setattr__(self, "mass", _frozen(mass))
        object.__setattr__(self, "values", _frozen(values))

    @property
    def parts(self) -> int:
        return int(self.mass.size)

    def weighted(self) -> np.ndarray:
        """values[i, j] * mass[i] * mass[j]"""
        return self.values * np.outer(self.mass, self.mass)

    def integral(self) -> float:
        return float(self.weighted().sum())

    def l1_norm(self) -> float:
        return float(np.abs(self.weighted()).sum())

    def permuted(self, perm: Sequence[int]) -> "StepFunction":
        """Same function with part ``perm[k]`` moved to position k."""
        perm = np.asarray(perm, dtype=np.intp)
        return StepFunction(self.mass[perm], self.values[np.ix_(perm, perm)])

    def scaled(self, factor: float) -> "StepFunction":
        return StepFunction(self.mass, factor * self.values)

    def _check_partition(self, other: "StepFunction") -> None:
        if self.parts != other.parts:
            raise SizeMismatchError(self.parts, other.parts)
        if not np.allclose(self.mass, other.mass, rtol=0.0, atol=MASS_TOLERANCE):
            raise ValidationError("Step functions live on different partitions", field="mass")

    def __add__(self, other: "StepFunction") -> "StepFunction":
        self._check_partition(other)
        return StepFunction(self.mass, self.values + other.values)

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        self._check_partition(other)
        return StepFunction(self.mass, self.values - other.values)

    def __repr__(self) -> str:
        return f"StepFunction(parts={self.parts})"

    @classmethod
    def from_document(cls, doc: StepFunctionDocument) -> "StepFunction":
        return cls(np.asarray(doc.mass), np.asarray(doc.values))


def as_step_function(obj: object) -> StepFunction:
    """The StepFunction behind a StepFunction or step kernel."""
    if isinstance(obj, StepFunction):
        return obj
    function = getattr(obj, "function", None)
    if isinstance(function, StepFunction):
        return function
    raise ValidationError(
        f"{type(obj).__name__} is not a step function", field="W", value=type(obj).__name__
    )


def random_step_function(
    rng: np.random.Generator,
    parts: int,
    low: float = -1.0,
    high: float = 1.0,
) -> StepFunction:
    """Dirichlet(1) masses and uniform values in [low, high]."""
    mass = rng.dirichlet(np.ones(parts))
    mass = mass / mass.sum()
    values = rng.uniform(low, high, size=(parts, parts))
    return StepFunction(mass, values)
