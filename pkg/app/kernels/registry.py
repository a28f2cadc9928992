"""
Kernels addressed by ``name:params`` strings.

    two_point:0.5   threshold:2   threshold:inf   total   trivial
    product2d       interval      from_poset:p.json   step:k.json
    constant:0.5    thin:<kernel>:0.3

``constant:c`` is the candidate W = c on [0, 1]; it is a kernel only for
c = 0 and is meant for the poset-limit test.
"""

from typing import Callable, Dict, List, NamedTuple

import numpy as np

from app.core.exceptions import ConfigurationError
from app.kernels import builtins
from app.kernels.base import FunctionKernel, Kernel, UnitInterval
from app.kernels.step import read_step_kernel
from app.kernels.thinning import thin
from app.posets.io import read_poset


class KernelEntry(NamedTuple):
    """Kernel builder addressable by name"""
    name: str
    params: str  # synopsis of the parameter part
    description: str
    build: Callable[[List[str]], Kernel]


def _number(text: str, name: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigurationError(f"{name} expects a number, got {text!r}") from None


def _one(args: List[str], name: str) -> str:
    if len(args) != 1:
        raise ConfigurationError(f"{name} takes exactly one parameter")
    return args[0]


def _plain(name: str, builder: Callable[[], Kernel]) -> Callable[[List[str]], Kernel]:
    def build(args: List[str]) -> Kernel:
        if args:
            raise ConfigurationError(f"{name} takes no parameters")
        return builder()

    return build


def _path(args: List[str], name: str) -> str:
    path = ":".join(args)
    if not path:
        raise ConfigurationError(f"{name} expects {name}:<path.json>")
    return path


def _constant(args: List[str]) -> Kernel:
    c = _number(_one(args, "constant"), "constant")
    return FunctionKernel(
        UnitInterval(), lambda x, y: np.full(np.shape(x), c), name=f"constant:{c:g}"
    )


def _thin(args: List[str]) -> Kernel:
    if len(args) < 2:
        raise ConfigurationError("thin expects thin:<kernel>:<s>")
    return thin(parse_kernel(":".join(args[:-1])), _number(args[-1], "thin"))


KERNELS: Dict[str, KernelEntry] = {
    "two_point": KernelEntry(
        name="two_point",
        params="p",
        description="W(0, 1) = p on the uniform two-point space",
        build=lambda a: builtins.two_point(_number(_one(a, "two_point"), "two_point")),
    ),
    "threshold": KernelEntry(
        name="threshold",
        params="a",
        description="1{y - x > 1/a} on [0, 1]; a may be inf",
        build=lambda a: builtins.threshold(_number(_one(a, "threshold"), "threshold")),
    ),
    "total": KernelEntry(
        name="total",
        params="",
        description="1{x < y} on [0, 1]",
        build=_plain("total", builtins.total_unit),
    ),
    "trivial": KernelEntry(
        name="trivial",
        params="",
        description="W = 0",
        build=_plain("trivial", builtins.trivial),
    ),
    "product2d": KernelEntry(
        name="product2d",
        params="",
        description="product order on [0, 1]^2",
        build=_plain("product2d", builtins.product2d),
    ),
    "interval": KernelEntry(
        name="interval",
        params="",
        description="random intervals ordered left to right",
        build=_plain("interval", builtins.interval),
    ),
    "from_poset": KernelEntry(
        name="from_poset",
        params="path.json",
        description="1{x <_P y} with uniform mass on a poset file",
        build=lambda a: builtins.from_poset(read_poset(_path(a, "from_poset"))),
    ),
    "step": KernelEntry(
        name="step",
        params="path.json",
        description="step kernel file with mass, values and order",
        build=lambda a: read_step_kernel(_path(a, "step")),
    ),
    "constant": KernelEntry(
        name="constant",
        params="c",
        description="candidate W = c on [0, 1] (not a kernel unless c = 0)",
        build=_constant,
    ),
    "thin": KernelEntry(
        name="thin",
        params="<kernel>:s",
        description="adjoin an isolated atom of mass 1 - s",
        build=_thin,
    ),
}


def parse_kernel(spec: str) -> Kernel:
    """Build the kernel named by ``spec``.

    Raises:
        ConfigurationError: For unknown names or malformed parameters.
        ParameterRangeError: For parameters outside the builder's range.
    """
    name, *args = spec.strip().split(":")
    entry = KERNELS.get(name)
    if entry is None:
        known = ", ".join(sorted(KERNELS))
        raise ConfigurationError(f"Unknown kernel {name!r}; known kernels: {known}")
    return entry.build(args)
