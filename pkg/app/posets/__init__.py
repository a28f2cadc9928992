"""
Posets

Labelled finite posets, digraphs, structural operations and file I/O.
"""

from app.posets.classify import classify_digraph
from app.posets.io import read_digraph, read_poset, write_poset
from app.posets.operations import (
    all_labelled_posets,
    are_isomorphic,
    comparable_count,
    disjoint_union,
    enumerate_extensions,
    is_induced_equal,
    is_subposet,
    isomorphism_classes,
    random_relabel,
    restrict,
    transitive_reduction,
)
from app.posets.poset import (
    ClosurePolicy,
    Digraph,
    Poset,
    build_poset,
    chain_poset,
    is_strict_order,
    poset_from_matrix,
    relabel,
    topological_order,
    transitive_closure,
    trivial_poset,
)

__all__ = [
    "ClosurePolicy",
    "Digraph",
    "Poset",
    "all_labelled_posets",
    "are_isomorphic",
    "build_poset",
    "chain_poset",
    "classify_digraph",
    "comparable_count",
    "disjoint_union",
    "enumerate_extensions",
    "is_induced_equal",
    "is_strict_order",
    "is_subposet",
    "isomorphism_classes",
    "poset_from_matrix",
    "random_relabel",
    "read_digraph",
    "read_poset",
    "relabel",
    "restrict",
    "topological_order",
    "transitive_closure",
    "transitive_reduction",
    "trivial_poset",
    "write_poset",
]
