"""
Input Documents

Pydantic models for the JSON files read and written by the toolkit. Labels in
poset and digraph documents are 1-based.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class PosetDocument(BaseModel):
    """Poset file: ``{"n": 3, "relations": [[1, 2], [2, 3]]}``"""
    n: int = Field(..., ge=0, description="Number of elements")
    relations: List[Tuple[int, int]] = Field(
        default_factory=list, description="Strict relations i < j, 1-based"
    )
    closed: bool = Field(
        True, description="False marks the relation list as cover pairs to be closed"
    )

    @model_validator(mode="after")
    def check_labels(self) -> "PosetDocument":
        for i, j in self.relations:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Relation ({i}, {j}) outside labels 1..{self.n}")
        return self


class DigraphDocument(BaseModel):
    """Digraph file: ``{"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]}``"""
    n: int = Field(..., ge=0, description="Number of vertices")
    edges: List[Tuple[int, int]] = Field(
        default_factory=list, description="Directed edges, 1-based, loops allowed"
    )

    @model_validator(mode="after")
    def check_labels(self) -> "DigraphDocument":
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"Edge ({i}, {j}) outside labels 1..{self.n}")
        return self


class StepFunctionDocument(BaseModel):
    """Step function or step kernel file.

    ``{"mass": [...], "values": [[...]], "order": [[...]]}``; ``order`` is
    required for kernels and ignored for plain step functions.
    """
    mass: List[float] = Field(..., min_length=1, description="Part probabilities")
    values: List[List[float]] = Field(..., description="Value on each part pair")
    order: Optional[List[List[bool]]] = Field(
        None, description="Strict order on parts (kernels only)"
    )

    @field_validator("mass")
    @classmethod
    def check_mass(cls, v: List[float]) -> List[float]:
        if any(m < 0 for m in v):
            raise ValueError("Part masses must be non-negative")
        if abs(sum(v) - 1.0) > 1e-12 * max(1, len(v)):
            raise ValueError(f"Part masses sum to {sum(v)!r}, expected 1")
        return v

    @model_validator(mode="after")
    def check_shapes(self) -> "StepFunctionDocument":
        size = len(self.mass)
        if len(self.values) != size or any(len(row) != size for row in self.values):
            raise ValueError(f"values must be a {size}x{size} matrix")
        if self.order is not None and (
            len(self.order) != size or any(len(row) != size for row in self.order)
        ):
            raise ValueError(f"order must be a {size}x{size} matrix")
        return self
