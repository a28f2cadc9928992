"""
Structural operations on labelled posets.

Restriction, relabelling, disjoint union, containment tests, enumeration of
extensions and isomorphism testing.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from app.core.config import settings
from app.core.exceptions import EmptySubsetError, SizeMismatchError, ValidationError
from app.posets.poset import Poset, comparable_mask, relabel, trivial_poset


def restrict(P: Poset, A: Iterable[int]) -> Poset:
    """Induced subposet on the labels in ``A``, relabelled 1..|A| in label order."""
    labels = sorted(set(A))
    if not labels:
        raise EmptySubsetError("Cannot restrict a poset to an empty subset")
    for label in labels:
        if not 1 <= label <= P.n:
            raise ValidationError(
                f"Label {label} outside 1..{P.n}", field="A", value=label
            )
    index = np.asarray(labels, dtype=np.intp) - 1
    return Poset(len(labels), P.rel[np.ix_(index, index)])


def random_relabel(P: Poset, rng: np.random.Generator) -> Poset:
    """P with its labels permuted uniformly at random."""
    return relabel(P, rng.permutation(P.n))


def disjoint_union(Q1: Poset, Q2: Poset) -> Poset:
    """Q1 on labels 1..|Q1| followed by Q2 on |Q1|+1..|Q1|+|Q2|, no cross relations."""
    n = Q1.n + Q2.n
    rel = np.zeros((n, n), dtype=bool)
    rel[: Q1.n, : Q1.n] = Q1.rel
    rel[Q1.n :, Q1.n :] = Q2.rel
    return Poset(n, rel)


def _check_same_size(Q: Poset, P: Poset) -> None:
    if Q.n != P.n:
        raise SizeMismatchError(Q.n, P.n)


def is_subposet(Q: Poset, P: Poset) -> bool:
    """Labelwise containment: i <_Q j implies i <_P j."""
    _check_same_size(Q, P)
    return not (Q.rel & ~P.rel).any()


def is_induced_equal(Q: Poset, P: Poset) -> bool:
    """Labelwise equality of the two relations."""
    _check_same_size(Q, P)
    return bool(np.array_equal(Q.rel, P.rel))


def comparable_count(Q: Poset) -> int:
    """Number of elements comparable to at least one other element."""
    return int(comparable_mask(Q).sum())


def transitive_reduction(P: Poset) -> List[Tuple[int, int]]:
    """Cover pairs (i, j): i < j with no k strictly between them."""
    as_int = P.rel.astype(np.int64)
    covers = P.rel & ~(as_int @ as_int > 0)
    return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(covers))]


# Extensions are enumerated on successor bitmasks: succ[i] has bit j set iff i < j.

def _add_relation(succ: List[int], n: int, low: int, high: int) -> List[int]:
    """Close ``succ`` after adding low < high (low and high incomparable)."""
    above = succ[high] | (1 << high)
    result = list(succ)
    for a in range(n):
        if a == low or (succ[a] >> low) & 1:
            result[a] |= above
    return result


def _comparable(succ: List[int], i: int, j: int) -> bool:
    return bool((succ[i] >> j) & 1 or (succ[j] >> i) & 1)


def _extend(
    succ: List[int],
    n: int,
    kept_apart: Set[Tuple[int, int]],
    out: List[List[int]],
) -> None:
    pair: Optional[Tuple[int, int]] = None
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in kept_apart and not _comparable(succ, i, j):
                pair = (i, j)
                break
        if pair is not None:
            break
    if pair is None:
        out.append(succ)
        return

    i, j = pair
    _extend(succ, n, kept_apart | {pair}, out)
    for low, high in ((i, j), (j, i)):
        grown = _add_relation(succ, n, low, high)
        if any(_comparable(grown, a, b) for a, b in kept_apart):
            continue
        _extend(grown, n, kept_apart, out)


def enumerate_extensions(Q: Poset) -> List[Poset]:
    """All labelled posets on Q's ground set that contain Q's relation.

    Each incomparable pair is branched three ways (kept incomparable, i < j,
    j < i), so every extension appears exactly once.
    """
    n = Q.n
    succ = [sum(1 << int(j) for j in np.flatnonzero(Q.rel[i])) for i in range(n)]
    found: List[List[int]] = []
    _extend(succ, n, set(), found)
    logger.debug("Enumerated {} extensions of a {}-element poset", len(found), n)

    extensions = []
    for masks in found:
        rel = np.zeros((n, n), dtype=bool)
        for i, mask in enumerate(masks):
            for j in range(n):
                if (mask >> j) & 1:
                    rel[i, j] = True
        extensions.append(Poset(n, rel))
    return extensions


def all_labelled_posets(n: int) -> List[Poset]:
    """Every labelled poset on 1..n (the extensions of E_n)."""
    return enumerate_extensions(trivial_poset(n))


def _signatures(P: Poset) -> List[Tuple[int, int]]:
    """(down-degree, up-degree) of every element in the closed relation."""
    down = P.rel.sum(axis=0)
    up = P.rel.sum(axis=1)
    return [(int(d), int(u)) for d, u in zip(down, up)]


def are_isomorphic(Q1: Poset, Q2: Poset) -> bool:
    """Relation-preserving bijection search with degree-signature pruning.

    Worst case O(n!); intended for posets of up to about 12 elements.
    """
    if Q1.n != Q2.n or Q1.relation_count != Q2.relation_count:
        return False
    sig1 = _signatures(Q1)
    sig2 = _signatures(Q2)
    if sorted(sig1) != sorted(sig2):
        return False
    n = Q1.n
    if n > settings.isomorphism_max_size:
        logger.debug("Isomorphism search on {} elements may be slow", n)

    by_signature: Dict[Tuple[int, int], List[int]] = {}
    for v, sig in enumerate(sig2):
        by_signature.setdefault(sig, []).append(v)
    # rarest signatures first
    order = sorted(range(n), key=lambda v: (len(by_signature[sig1[v]]), v))

    rel1, rel2 = Q1.rel, Q2.rel
    image = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int, depth: int) -> bool:
        for u in order[:depth]:
            fu = image[u]
            if rel1[u, v] != rel2[fu, w] or rel1[v, u] != rel2[w, fu]:
                return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in by_signature[sig1[v]]:
            if used[w] or not consistent(v, w, depth):
                continue
            image[v] = w
            used[w] = True
            if search(depth + 1):
                return True
            used[w] = False
        image[v] = -1
        return False

    return search(0)


def isomorphism_classes(posets: Sequence[Poset]) -> List[List[Poset]]:
    """Group posets into isomorphism classes, preserving first-seen order."""
    classes: List[List[Poset]] = []
    for P in posets:
        invariant = (P.n, P.relation_count, sorted(_signatures(P)))
        for group in classes:
            rep = group[0]
            if (rep.n, rep.relation_count, sorted(_signatures(rep))) == invariant and (
                are_isomorphic(rep, P)
            ):
                group.append(P)
                break
        else:
            classes.append([P])
    return classes
