"""
Named Digraphs and Reference Values

Defines the small digraphs that certify (or refute) the poset property, and
known counts used for self-checks.
"""

from typing import Dict, NamedTuple, Tuple


class SpecialDigraph(NamedTuple):
    """Named digraph on the labels 1..n"""
    name: str
    description: str
    n: int
    edges: Tuple[Tuple[int, int], ...]


# Forbidden induced subgraphs of a poset, plus the test digraphs D1-D3
SPECIAL_DIGRAPHS: Dict[str, SpecialDigraph] = {
    "C1": SpecialDigraph(
        name="C1",
        description="single vertex with a loop",
        n=1,
        edges=((1, 1),),
    ),
    "C2": SpecialDigraph(
        name="C2",
        description="two vertices joined in both directions",
        n=2,
        edges=((1, 2), (2, 1)),
    ),
    "C3": SpecialDigraph(
        name="C3",
        description="directed 3-cycle",
        n=3,
        edges=((1, 2), (2, 3), (3, 1)),
    ),
    "P2": SpecialDigraph(
        name="P2",
        description="directed path of length 2, not closed",
        n=3,
        edges=((1, 2), (2, 3)),
    ),
    "D1": SpecialDigraph(
        name="D1",
        description="path 12, 23",
        n=3,
        edges=((1, 2), (2, 3)),
    ),
    "D2": SpecialDigraph(
        name="D2",
        description="chain 12, 23, 13",
        n=3,
        edges=((1, 2), (2, 3), (1, 3)),
    ),
    "D3": SpecialDigraph(
        name="D3",
        description="cycle 12, 23, 31",
        n=3,
        edges=((1, 2), (2, 3), (3, 1)),
    ),
}

# Order in which witnesses are reported by the classifier
WITNESS_KINDS: Tuple[str, ...] = ("C1", "C2", "C3", "P2")

# Number of labelled posets on [n] (OEIS A001035)
LABELLED_POSET_COUNTS: Dict[int, int] = {
    0: 1,
    1: 1,
    2: 3,
    3: 19,
    4: 219,
    5: 4231,
}

# Number of unlabelled posets on n elements (OEIS A000112)
UNLABELLED_POSET_COUNTS: Dict[int, int] = {
    1: 1,
    2: 2,
    3: 5,
    4: 16,
    5: 63,
}

# Column schema of the convergence experiment CSV
CONVERGE_COLUMNS: Tuple[str, ...] = (
    "n",
    "rep",
    "t_inj_estimate",
    "delta_upper",
    "delta_lower",
    "max_density_gap",
    "method",
)
