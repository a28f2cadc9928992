"""
Cut Metric

Step functions, exact cut norms, homomorphism densities in step functions and
cut-distance bounds. The convergence experiment lives in
``app.cut.convergence`` and is imported from there.
"""

from app.cut.counting import t_digraph_step
from app.cut.distance import (
    coupled_norm,
    cut_distance_bounds,
    default_family,
    delta_cut_lower,
    delta_cut_upper,
    marginal_error,
    north_west_corner,
)
from app.cut.norms import (
    CutWitness,
    cut_norm_func,
    cut_norm_rect,
    cut_norm_rect_witness,
    spectral_bound,
)
from app.cut.step_function import StepFunction, as_step_function, random_step_function

__all__ = [
    "CutWitness",
    "StepFunction",
    "as_step_function",
    "coupled_norm",
    "cut_distance_bounds",
    "cut_norm_func",
    "cut_norm_rect",
    "cut_norm_rect_witness",
    "default_family",
    "delta_cut_lower",
    "delta_cut_upper",
    "marginal_error",
    "north_west_corner",
    "random_step_function",
    "spectral_bound",
    "t_digraph_step",
]
