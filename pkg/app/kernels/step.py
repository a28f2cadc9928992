"""
Step kernels: kernels that are constant on products of finitely many parts.
"""

from pathlib import Path
from typing import Optional, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import ValidationError
from app.cut.step_function import StepFunction
from app.kernels.base import Kernel, PartSpace
from app.models.documents import StepFunctionDocument
from app.posets.io import load_document
from app.posets.poset import Poset, is_strict_order


class StepKernel(Kernel):
    """Kernel on a finite set of parts with masses, part order and values.

    Validated on construction: values in [0, 1], a strict part order, values
    positive only on ordered part pairs, and forced transitivity
    (values[i, j] > 0 and values[j, k] > 0 imply values[i, k] = 1).
    """

    def __init__(
        self,
        mass: np.ndarray,
        values: np.ndarray,
        order: np.ndarray,
        name: str = "step",
        tolerance: float = 0.0,
    ):
        function = StepFunction(mass, values)
        order = np.array(order, dtype=bool)
        self._validate(function.values, order, tolerance)
        order.setflags(write=False)
        super().__init__(PartSpace(function.mass, order), name)
        self.function = function
        self.order = order

    @staticmethod
    def _validate(values: np.ndarray, order: np.ndarray, tolerance: float) -> None:
        if order.shape != values.shape:
            raise ValidationError(
                f"order must be {values.shape[0]}x{values.shape[0]}",
                field="order",
                value=order.shape,
            )
        if (values < 0).any() or (values > 1).any():
            raise ValidationError("Kernel values must lie in [0, 1]", field="values")
        if not is_strict_order(order):
            raise ValidationError("Part order is not a strict partial order", field="order")
        positive = values > tolerance
        if (positive & ~order).any():
            i, j = (int(v) for v in np.argwhere(positive & ~order)[0])
            raise ValidationError(
                f"values[{i}][{j}] > 0 on parts that are not ordered", field="values"
            )
        as_int = positive.astype(np.int64)
        forced = (as_int @ as_int) > 0
        if (forced & (values < 1 - tolerance)).any():
            i, k = (int(v) for v in np.argwhere(forced & (values < 1 - tolerance))[0])
            raise ValidationError(
                f"values[{i}][{k}] must be 1 by forced transitivity", field="values"
            )

    @property
    def mass(self) -> np.ndarray:
        return self.function.mass

    @property
    def values(self) -> np.ndarray:
        return self.function.values

    @property
    def parts(self) -> int:
        return self.function.parts

    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.values[np.asarray(x, dtype=np.intp), np.asarray(y, dtype=np.intp)]

    def permuted(self, perm) -> "StepKernel":
        perm = np.asarray(perm, dtype=np.intp)
        return StepKernel(
            self.mass[perm],
            self.values[np.ix_(perm, perm)],
            self.order[np.ix_(perm, perm)],
            name=self.name,
        )

    @classmethod
    def from_document(
        cls, doc: StepFunctionDocument, name: str = "step", tolerance: float = 0.0
    ) -> "StepKernel":
        values = np.asarray(doc.values, dtype=np.float64)
        order = np.asarray(doc.order, dtype=bool) if doc.order is not None else values > 0
        return cls(np.asarray(doc.mass), values, order, name=name, tolerance=tolerance)


def step_from_poset(P: Poset) -> StepKernel:
    """|P| equal parts with 0/1 values from the relation of P."""
    if P.n == 0:
        raise ValidationError("Cannot build a kernel on an empty poset", field="P", value=0)
    mass = np.full(P.n, 1.0 / P.n)
    return StepKernel(mass, P.rel.astype(np.float64), P.rel, name=f"poset[{P.n}]")


def read_step_function(path: Union[str, Path]) -> StepFunction:
    return StepFunction.from_document(load_document(path, StepFunctionDocument))


def read_step_kernel(path: Union[str, Path], tolerance: Optional[float] = None) -> StepKernel:
    """Read a step kernel file; a missing ``order`` is taken as values > 0."""
    tol = settings.axiom_tolerance_user if tolerance is None else tolerance
    return StepKernel.from_document(
        load_document(path, StepFunctionDocument), name=Path(path).stem, tolerance=tol
    )
