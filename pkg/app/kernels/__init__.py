"""
Kernels

Ordered probability spaces, kernels on them, the built-in examples, axiom
checks, kernel densities, the poset-limit criterion and thinning.
"""

from app.kernels.axioms import check_axioms
from app.kernels.base import (
    FunctionKernel,
    IndicatorKernel,
    IntervalSpace,
    Kernel,
    OrderedSpace,
    PartSpace,
    UnitInterval,
    UnitSquare,
)
from app.kernels.builtins import (
    ThresholdKernel,
    from_poset,
    indicator,
    interval,
    product2d,
    threshold,
    total_unit,
    trivial,
    two_point,
)
from app.kernels.criteria import poset_limit_test
from app.kernels.densities import (
    t_digraph_exact_step,
    t_digraph_mc,
    t_kernel_exact_step,
    t_kernel_mc,
)
from app.kernels.registry import KERNELS, parse_kernel
from app.kernels.step import StepKernel, read_step_function, read_step_kernel, step_from_poset
from app.kernels.thinning import ThinnedKernel, thin, thin_poset

__all__ = [
    "KERNELS",
    "FunctionKernel",
    "IndicatorKernel",
    "IntervalSpace",
    "Kernel",
    "OrderedSpace",
    "PartSpace",
    "StepKernel",
    "ThinnedKernel",
    "ThresholdKernel",
    "UnitInterval",
    "UnitSquare",
    "check_axioms",
    "from_poset",
    "indicator",
    "interval",
    "parse_kernel",
    "poset_limit_test",
    "product2d",
    "read_step_function",
    "read_step_kernel",
    "step_from_poset",
    "t_digraph_exact_step",
    "t_digraph_mc",
    "t_kernel_exact_step",
    "t_kernel_mc",
    "thin",
    "thin_poset",
    "threshold",
    "total_unit",
    "trivial",
    "two_point",
]
