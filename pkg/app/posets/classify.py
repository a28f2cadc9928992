"""
Forbidden-subgraph classification of digraphs.

A digraph is a strict partial order exactly when it has no induced loop (C1),
double edge (C2), directed 3-cycle (C3) or non-closed 2-path (P2). The first
witness in lexicographic vertex order is reported.
"""

from typing import Optional

import numpy as np

from app.models.results import ClassifyResult, Witness
from app.posets.poset import Digraph


def _first_loop(adj: np.ndarray) -> Optional[Witness]:
    loops = np.flatnonzero(adj.diagonal())
    if loops.size:
        return Witness(kind="C1", vertices=[int(loops[0]) + 1])
    return None


def _first_double_edge(adj: np.ndarray) -> Optional[Witness]:
    pairs = np.argwhere(np.triu(adj & adj.T, 1))
    if pairs.size:
        i, j = pairs[0]
        return Witness(kind="C2", vertices=[int(i) + 1, int(j) + 1])
    return None


def _first_open_path(adj: np.ndarray) -> Optional[Witness]:
    # Loops and double edges are already excluded, so i, j, k are distinct
    for i in range(adj.shape[0]):
        # open[j, k]: i -> j -> k without i -> k
        open_paths = adj[i][:, None] & adj & ~adj[i][None, :]
        hits = np.argwhere(open_paths)
        if hits.size:
            j, k = (int(v) for v in hits[0])
            kind = "C3" if adj[k, i] else "P2"
            return Witness(kind=kind, vertices=[i + 1, j + 1, k + 1])
    return None


def classify_digraph(G: Digraph) -> ClassifyResult:
    """Decide whether the edge relation of ``G`` is a strict partial order."""
    adj = G.adj
    for finder in (_first_loop, _first_double_edge, _first_open_path):
        witness = finder(adj)
        if witness is not None:
            return ClassifyResult(verdict="not-poset", witness=witness)
    return ClassifyResult(verdict="poset")
