"""
Finite labelled posets and digraphs.

A poset on the labels 1..n is stored as its transitively closed strict
relation matrix ``rel`` (``rel[i, j]`` is True iff i+1 < j+1 in the order).
Matrices are indexed from 0; every public function that takes or returns
labels uses the 1-based labels.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from app.core.exceptions import (
    CycleError,
    NotAPosetError,
    NotClosedError,
    ValidationError,
)


class ClosurePolicy(str, Enum):
    """How build_poset treats a relation list that is not transitively closed"""
    TAKE = "take-closure"
    REQUIRE = "require-closed"


def _frozen_bool_matrix(matrix: np.ndarray, n: int, name: str) -> np.ndarray:
    array = np.array(matrix, dtype=bool)
    if array.shape != (n, n):
        raise ValidationError(
            f"{name} must be a {n}x{n} matrix, got shape {array.shape}",
            field=name,
            value=array.shape,
        )
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Digraph:
    """Directed graph on the vertices 1..n (loops allowed)"""
    n: int
    adj: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "adj", _frozen_bool_matrix(self.adj, self.n, "adj"))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Digraph":
        adj = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            _check_label(i, n)
            _check_label(j, n)
            adj[i - 1, j - 1] = True
        return cls(n, adj)

    def edges(self) -> List[Tuple[int, int]]:
        return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self.adj))]

    def edge_count(self) -> int:
        return int(self.adj.sum())

    def is_simple(self) -> bool:
        """No loops and no pair joined in both directions."""
        return not self.adj.diagonal().any() and not (self.adj & self.adj.T).any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adj, other.adj))

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, eq=False)
class Poset:
    """Labelled finite strict partial order on 1..n.

    The constructor trusts its input; use :func:`build_poset` for untrusted
    relations and :func:`is_strict_order` to validate.
    """
    n: int
    rel: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rel", _frozen_bool_matrix(self.rel, self.n, "rel"))

    def less(self, i: int, j: int) -> bool:
        """True iff i < j in this order (1-based labels)."""
        return bool(self.rel[i - 1, j - 1])

    def relations(self) -> List[Tuple[int, int]]:
        return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self.rel))]

    @property
    def relation_count(self) -> int:
        return int(self.rel.sum())

    def key(self) -> bytes:
        """Canonical bytes of the labelled relation matrix."""
        return self.n.to_bytes(4, "little") + np.packbits(self.rel).tobytes()

    def as_digraph(self) -> Digraph:
        return Digraph(self.n, self.rel)

    def is_trivial(self) -> bool:
        return not self.rel.any()

    def is_total_order(self) -> bool:
        """Every pair of distinct elements is comparable."""
        comparable = self.rel | self.rel.T
        return bool(comparable.sum() == self.n * (self.n - 1))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.rel, other.rel))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={self.relations()})"


def _check_label(label: int, n: int) -> None:
    if not 1 <= label <= n:
        raise ValidationError(f"Label {label} outside 1..{n}", field="label", value=label)


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reachability matrix by repeated boolean squaring.

    Path counts stay below n, so float32 products are exact for n < 2**24.
    """
    reach = np.array(adj, dtype=bool)
    if reach.size == 0:
        return reach
    while True:
        as_float = reach.astype(np.float32)
        step = reach | ((as_float @ as_float) > 0)
        if np.array_equal(step, reach):
            return step
        reach = step


def is_strict_order(rel: np.ndarray) -> bool:
    """Direct axiom check: irreflexive, asymmetric and transitive."""
    rel = np.asarray(rel, dtype=bool)
    if rel.diagonal().any() or (rel & rel.T).any():
        return False
    as_int = rel.astype(np.int64)
    return not ((as_int @ as_int > 0) & ~rel).any()


def build_poset(
    n: int,
    pairs: Iterable[Tuple[int, int]],
    closure: ClosurePolicy = ClosurePolicy.TAKE,
) -> Poset:
    """Build a poset on 1..n from strict relations ``(i, j)`` meaning i < j.

    Under ``take-closure`` the transitive closure of ``pairs`` is used; under
    ``require-closed`` the pairs must already be transitively closed.

    Raises:
        CycleError: If the relation (or its closure) relates an element to itself.
        NotClosedError: Under require-closed, if a forced relation is missing.
    """
    closure = ClosurePolicy(closure)
    if n < 0:
        raise ValidationError("Element count must be non-negative", field="n", value=n)
    adj = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        _check_label(i, n)
        _check_label(j, n)
        if i == j:
            raise CycleError(f"Relation {i} < {i} violates irreflexivity", element=i)
        adj[i - 1, j - 1] = True

    closed = transitive_closure(adj)
    loops = np.flatnonzero(closed.diagonal())
    if loops.size:
        element = int(loops[0]) + 1
        raise CycleError(
            f"Relations form a cycle through element {element}",
            element=element,
            details={"cycle_elements": [int(k) + 1 for k in loops]},
        )
    if closure is ClosurePolicy.REQUIRE:
        missing = np.argwhere(closed & ~adj)
        if missing.size:
            i, j = (int(v) + 1 for v in missing[0])
            raise NotClosedError(
                f"Relation list is not transitively closed: {i} < {j} is implied but missing",
                missing=(i, j),
                details={"missing_count": int(len(missing))},
            )
    return Poset(n, closed)


def trivial_poset(n: int) -> Poset:
    """The antichain E_n."""
    return Poset(n, np.zeros((n, n), dtype=bool))


def chain_poset(k: int) -> Poset:
    """The total order 1 < 2 < ... < k."""
    return Poset(k, np.triu(np.ones((k, k), dtype=bool), 1))


def poset_from_matrix(rel: np.ndarray) -> Poset:
    """Poset from an already closed relation matrix, validating the axioms."""
    rel = np.asarray(rel, dtype=bool)
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise ValidationError("Relation matrix must be square", field="rel", value=rel.shape)
    if not is_strict_order(rel):
        raise NotAPosetError("Relation matrix is not a strict partial order")
    return Poset(rel.shape[0], rel)


def relabel(P: Poset, perm: Sequence[int]) -> Poset:
    """Move element i (0-based) to position ``perm[i]``."""
    perm = np.asarray(perm, dtype=np.intp)
    rel = np.zeros_like(P.rel)
    rel[np.ix_(perm, perm)] = P.rel
    return Poset(P.n, rel)


def comparable_mask(P: Poset) -> np.ndarray:
    return (P.rel | P.rel.T).any(axis=1)


def topological_order(P: Poset) -> List[int]:
    """0-based indices sorted so that every element follows all its predecessors."""
    depth = P.rel.sum(axis=0)
    return [int(v) for v in np.argsort(depth, kind="stable")]
