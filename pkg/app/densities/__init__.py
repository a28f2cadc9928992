"""
Densities

Exact and Monte-Carlo homomorphism densities between finite posets.
"""

from app.densities.exact import MapKind, count_maps, t_exact, t_ind_exact, t_inj_exact
from app.densities.montecarlo import (
    MomentAccumulator,
    SamplingMode,
    accumulate,
    sample_induced,
    t_mc,
    t_mc_partitioned,
)

__all__ = [
    "MapKind",
    "MomentAccumulator",
    "SamplingMode",
    "accumulate",
    "count_maps",
    "sample_induced",
    "t_exact",
    "t_ind_exact",
    "t_inj_exact",
    "t_mc",
    "t_mc_partitioned",
]
