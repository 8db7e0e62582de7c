from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..linalg import DEFAULT_TOLERANCES, Tolerances
from .element import AlgebraElement

# Margin factor around a threshold inside which a decision is not trusted.
GRAY_FACTOR = 10.0


def fiber_threshold(singular_values: np.ndarray, tol: Tolerances) -> np.ndarray:
    """Per-fiber cutoff below which a singular value (or a trace) counts as zero."""
    return np.maximum(tol.rank * singular_values[..., 0], tol.absolute)


def coefficient_is_zero(a: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return abs(a) < tol.rank


@dataclass(frozen=True)
class FiberRankProfile:
    ranks: np.ndarray
    traces: np.ndarray
    delta0: Tuple[int, ...]
    delta10: Tuple[int, ...]
    delta11: Tuple[int, ...]
    delta2: Tuple[int, ...]
    indeterminate: Tuple[int, ...]

    @property
    def delta1(self) -> Tuple[int, ...]:
        return tuple(sorted(self.delta10 + self.delta11))

    @property
    def is_determinate(self) -> bool:
        return not self.indeterminate


def rank_profile(
    x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES
) -> FiberRankProfile:
    """Rank of every fiber, and the split of rank-one fibers by trace.

    Fibers whose smallest nonzero decision lies within a factor ``GRAY_FACTOR``
    of its threshold are listed in ``indeterminate`` (they are still classified).
    """
    if x.m == 0:
        empty = ()
        return FiberRankProfile(
            np.zeros(0, dtype=int), np.zeros(0, dtype=np.complex128), *([empty] * 5)
        )
    s = np.linalg.svd(x.fibers, compute_uv=False)
    threshold = fiber_threshold(s, tol)
    ranks = np.sum(s > threshold[:, None], axis=1)
    traces = np.trace(x.fibers, axis1=1, axis2=2)

    near = np.any(
        (s > threshold[:, None] / GRAY_FACTOR) & (s <= threshold[:, None] * GRAY_FACTOR),
        axis=1,
    )
    rank_one = ranks == 1
    nilpotent = rank_one & (np.abs(traces) <= threshold)
    near |= rank_one & (np.abs(traces) > threshold / GRAY_FACTOR) & (
        np.abs(traces) <= threshold * GRAY_FACTOR
    )

    def indices(mask):
        return tuple(int(j) for j in np.flatnonzero(mask))

    return FiberRankProfile(
        ranks=ranks,
        traces=traces,
        delta0=indices(ranks == 0),
        delta10=indices(nilpotent),
        delta11=indices(rank_one & ~nilpotent),
        delta2=indices(ranks == 2),
        indeterminate=indices(near),
    )
