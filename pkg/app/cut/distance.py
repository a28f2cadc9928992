"""
Cut-distance bounds between step functions.

The cut distance is bounded from above by the cut norm of W1 - W2 overlaid
through a coupling of the two part measures (a matrix with row sums mass1 and
column sums mass2), and from below by the counting lemma
|t(F, W1) - t(F, W2)| <= e(F) * distance for simple digraphs F.

Couplings are searched over north-west-corner vertices of the transportation
polytope: a row order and a column order determine the vertex, and local
search swaps entries of either order. The first restart starts from parts
sorted by weighted row sum, column sum and mass; the others from random orders.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pydantic
from loguru import logger

from app.core.config import settings
from app.core.constants import SPECIAL_DIGRAPHS, SpecialDigraph
from app.core.exceptions import ValidationError
from app.cut.counting import t_digraph_step
from app.cut.norms import rect_from_weighted, spectral_bound
from app.cut.step_function import StepFunction, as_step_function
from app.models.results import CutDistanceBounds
from app.posets.operations import all_labelled_posets
from app.posets.poset import Digraph, Poset
from app.utils.streams import run_replicates, spawn_generators

CELL_EPSILON = 1e-15
ZERO_NORM = 1e-12

TestDigraph = Union[Poset, Digraph, SpecialDigraph]


def north_west_corner(
    row_mass: np.ndarray,
    col_mass: np.ndarray,
    row_order: Sequence[int],
    col_order: Sequence[int],
) -> np.ndarray:
    """Vertex of the transportation polytope filled greedily along the given orders."""
    coupling = np.zeros((row_mass.size, col_mass.size))
    a, b = 0, 0
    left_row, left_col = row_mass[row_order[0]], col_mass[col_order[0]]
    while a < row_mass.size and b < col_mass.size:
        flow = min(left_row, left_col)
        coupling[row_order[a], col_order[b]] += flow
        left_row -= flow
        left_col -= flow
        if left_row <= CELL_EPSILON:
            a += 1
            if a < row_mass.size:
                left_row = row_mass[row_order[a]]
        if left_col <= CELL_EPSILON:
            b += 1
            if b < col_mass.size:
                left_col = col_mass[col_order[b]]
    return coupling


def marginal_error(coupling: np.ndarray, mass1: np.ndarray, mass2: np.ndarray) -> float:
    return float(
        max(
            np.abs(coupling.sum(axis=1) - mass1).max(),
            np.abs(coupling.sum(axis=0) - mass2).max(),
        )
    )


def coupled_norm(
    F1: StepFunction, F2: StepFunction, coupling: np.ndarray, max_parts: Optional[int] = None
) -> Tuple[float, str]:
    """Cut norm of W1 - W2 overlaid through ``coupling``, and how it was computed.

    Exact over the positive cells when there are at most ``max_parts`` of
    them; otherwise the spectral upper bound.
    """
    limit = settings.cut_norm_max_parts if max_parts is None else max_parts
    rows, cols = np.nonzero(coupling > CELL_EPSILON)
    weight = coupling[rows, cols]
    diff = F1.values[np.ix_(rows, rows)] - F2.values[np.ix_(cols, cols)]
    if rows.size <= limit:
        return rect_from_weighted(diff * np.outer(weight, weight), limit).value, "exact"
    return spectral_bound(diff, weight), "spectral"


def _sorted_order(F: StepFunction) -> np.ndarray:
    row = np.round(F.values @ F.mass, 12)
    col = np.round(F.mass @ F.values, 12)
    return np.lexsort((np.round(F.mass, 15), col, row))


def _swaps(size: int) -> List[Tuple[int, int]]:
    if size <= settings.full_swap_limit:
        return [(a, b) for a in range(size) for b in range(a + 1, size)]
    return [(a, a + 1) for a in range(size - 1)]


@dataclass
class _Search:
    F1: StepFunction
    F2: StepFunction
    sweeps: int
    max_parts: Optional[int] = None

    def evaluate(self, rows: np.ndarray, cols: np.ndarray) -> Tuple[float, str, np.ndarray]:
        coupling = north_west_corner(self.F1.mass, self.F2.mass, rows, cols)
        value, method = coupled_norm(self.F1, self.F2, coupling, self.max_parts)
        return value, method, coupling

    def run(self, rows: np.ndarray, cols: np.ndarray) -> Tuple[float, str, np.ndarray]:
        best = self.evaluate(rows, cols)
        cells = int((best[2] > CELL_EPSILON).sum())
        if best[1] == "spectral" or cells > settings.local_search_max_cells:
            return best
        for _ in range(self.sweeps):
            improved = False
            for order in (rows, cols):
                for a, b in _swaps(order.size):
                    if best[0] <= ZERO_NORM:
                        return best
                    order[[a, b]] = order[[b, a]]
                    trial = self.evaluate(rows, cols)
                    if trial[0] < best[0] - CELL_EPSILON:
                        best, improved = trial, True
                    else:
                        order[[a, b]] = order[[b, a]]
            if not improved:
                break
        return best


def _canonical_key(F: StepFunction) -> Tuple[int, bytes, bytes]:
    return F.parts, F.mass.tobytes(), F.values.tobytes()


def delta_cut_upper(
    W1: object,
    W2: object,
    restarts: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    sweeps: Optional[int] = None,
    threads: Optional[int] = None,
    max_parts: Optional[int] = None,
) -> CutDistanceBounds:
    """Upper bound on the cut distance with its witnessing coupling.

    Coupled differences with more than ``max_parts`` positive cells are
    bounded spectrally; local search runs only on small overlays.

    ``lower`` carries only the trivial bound |integral W1 - integral W2|; use
    :func:`cut_distance_bounds` for the counting-lemma bound.
    """
    F1, F2 = as_step_function(W1), as_step_function(W2)
    restarts = settings.cut_restarts if restarts is None else restarts
    sweeps = settings.local_search_sweeps if sweeps is None else sweeps
    if restarts < 1:
        raise ValidationError("restarts must be at least 1", field="restarts", value=restarts)
    rng = rng if rng is not None else np.random.default_rng(settings.default_seed)

    # The search is run on a fixed argument order so that swapping inputs only transposes
    swapped = _canonical_key(F2) < _canonical_key(F1)
    if swapped:
        F1, F2 = F2, F1
    search = _Search(F1, F2, sweeps, max_parts)
    first_rows, first_cols = _sorted_order(F1), _sorted_order(F2)

    def restart(index: int, gen: np.random.Generator) -> Tuple[float, str, np.ndarray]:
        if index == 0:
            rows, cols = first_rows.copy(), first_cols.copy()
        else:
            rows, cols = gen.permutation(F1.parts), gen.permutation(F2.parts)
        return search.run(rows, cols)

    results = run_replicates(restart, spawn_generators(rng, restarts), threads)
    value, method, coupling = min(results, key=lambda r: r[0])
    logger.debug(
        "Cut distance upper bound {:.6g} ({}) over {} restarts", value, method, restarts
    )
    if swapped:
        coupling = coupling.T
    trivial_lower = abs(F1.integral() - F2.integral())
    return CutDistanceBounds(
        lower=min(trivial_lower, value),
        upper=value,
        coupling=coupling.tolist(),
        method=method,
        restarts=restarts,
    )


def _as_edges(F: TestDigraph) -> Tuple[int, List[Tuple[int, int]]]:
    if isinstance(F, Poset):
        return F.n, F.relations()
    if isinstance(F, Digraph):
        return F.n, F.edges()
    return F.n, list(F.edges)


def default_family() -> List[TestDigraph]:
    """All labelled posets on 2 or 3 elements with a relation, plus D1 and D3."""
    family: List[TestDigraph] = []
    for size in (2, 3):
        family.extend(P for P in all_labelled_posets(size) if P.relation_count > 0)
    family.extend([SPECIAL_DIGRAPHS["D1"], SPECIAL_DIGRAPHS["D3"]])
    return family


def delta_cut_lower(
    W1: object,
    W2: object,
    family: Optional[Iterable[TestDigraph]] = None,
) -> float:
    """Counting-lemma lower bound: max over F of |t(F, W1) - t(F, W2)| / e(F).

    Raises:
        ValidationError: If a test digraph has a loop or a double edge, or a
            step function takes values outside [0, 1].
    """
    F1, F2 = as_step_function(W1), as_step_function(W2)
    for F in (F1, F2):
        if F.values.min() < 0.0 or F.values.max() > 1.0:
            raise ValidationError(
                "Counting bound needs kernel values in [0, 1]",
                field="values",
                value=(float(F.values.min()), float(F.values.max())),
            )
    best = 0.0
    for item in default_family() if family is None else family:
        k, edges = _as_edges(item)
        if not Digraph.from_edges(k, edges).is_simple():
            raise ValidationError(
                "Counting bound needs simple digraphs (no loops or double edges)",
                field="family",
                value=edges,
            )
        if not edges:
            continue
        gap = abs(t_digraph_step(k, edges, F1) - t_digraph_step(k, edges, F2))
        best = max(best, gap / len(edges))
    return best


def cut_distance_bounds(
    W1: object,
    W2: object,
    family: Optional[Iterable[TestDigraph]] = None,
    restarts: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    threads: Optional[int] = None,
    max_parts: Optional[int] = None,
) -> CutDistanceBounds:
    """Counting-lemma lower bound and coupling-search upper bound together."""
    upper = delta_cut_upper(
        W1, W2, restarts=restarts, rng=rng, threads=threads, max_parts=max_parts
    )
    lower = max(upper.lower, delta_cut_lower(W1, W2, family))
    try:
        return CutDistanceBounds.model_validate({**upper.model_dump(), "lower": lower})
    except pydantic.ValidationError as e:
        raise ValidationError(
            "Lower bound exceeds the upper bound", field="lower", value=lower
        ) from e
