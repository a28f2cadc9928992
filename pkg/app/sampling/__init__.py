"""
Sampling

W-random posets, random graph orders and exchangeability diagnostics.
"""

from app.sampling.exchangeability import (
    LabelDistribution,
    empirical_label_distribution,
    independence_test,
    orbit_check,
)
from app.sampling.wposet import (
    gnp_order,
    sample_relations,
    sample_wposet,
    t_inj_mean_over_samples,
)

__all__ = [
    "LabelDistribution",
    "empirical_label_distribution",
    "gnp_order",
    "independence_test",
    "orbit_check",
    "sample_relations",
    "sample_wposet",
    "t_inj_mean_over_samples",
]
