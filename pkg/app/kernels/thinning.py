"""
Thinning of a limit.

thin(W, s) adjoins an isolated atom * of mass 1 - s to the space of W, with
W(*, x) = W(x, *) = W(*, *) = 0. Densities scale as

    t(Q, thin(W, s)) = s ** c(Q) * t(Q, W),

where c(Q) counts the elements of Q comparable to some other element.
"""

import numpy as np

from app.core.exceptions import ParameterRangeError
from app.kernels.base import Kernel, OrderedSpace
from app.posets.poset import Poset


def _check_keep(s: float) -> float:
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise ParameterRangeError(f"s must lie in [0, 1], got {s}", field="s", value=s)
    return s


class ThinnedSpace(OrderedSpace):
    """Base points flattened, followed by a star flag (1.0 for the atom)"""

    def __init__(self, base: OrderedSpace, keep: float):
        self.base = base
        self.keep = keep
        self.base_shape = base.point_shape
        self.point_shape = (int(np.prod(self.base_shape, dtype=np.int64)) + 1,)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        base = self.base.sample(rng, size).reshape(size, -1)
        # Flags come from a child stream so that point prefixes do not depend on size
        star = rng.spawn(1)[0].random(size) >= self.keep
        return np.column_stack([base, star.astype(np.float64)])

    def split(self, x: np.ndarray):
        base = x[..., :-1].reshape(x.shape[:-1] + self.base_shape)
        return base, x[..., -1] > 0.5

    def less(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        bx, star_x = self.split(x)
        by, star_y = self.split(y)
        return self.base.less(bx, by) & ~star_x & ~star_y


class ThinnedKernel(Kernel):
    """Kernel of ``base`` extended by an isolated atom of mass 1 - keep"""

    def __init__(self, base: Kernel, keep: float):
        keep = _check_keep(keep)
        space = ThinnedSpace(base.space, keep)
        super().__init__(space, name=f"thin:{base.name}:{keep:g}")
        self.thinned = space
        self.base = base
        self.keep = keep
        self.exact = base.exact

    def w(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        bx, star_x = self.thinned.split(x)
        by, star_y = self.thinned.split(y)
        return np.where(star_x | star_y, 0.0, self.base.w(bx, by))


def thin(W: Kernel, s: float) -> ThinnedKernel:
    return ThinnedKernel(W, s)


def thin_poset(P: Poset, s: float, rng: np.random.Generator) -> Poset:
    """Keep each element's relations with probability ``s``; otherwise isolate it."""
    s = _check_keep(s)
    kept = rng.random(P.n) < s
    rel = P.rel & kept[:, None] & kept[None, :]
    return Poset(P.n, rel)
