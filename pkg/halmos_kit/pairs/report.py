from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from ..canonical import Dims, HalmosDecomposition
from .intertwiners import build_intertwiner, intertwiner_exists, intertwiner_residuals
from .theorems import (
    AnticommutatorAnalysis,
    SymmetryDistance,
    anticommutator_analysis,
    diff_spectrum,
    fredholm_index,
    invertibility_margin,
    symmetry_distance,
    trace_power_diff,
)

TRACE_POWERS = (1, 2, 3, 4, 5, 7)


@dataclass(frozen=True)
class PairReport:
    dims: Dims
    h_values: np.ndarray
    diff_spectrum: np.ndarray
    anticommutator: AnticommutatorAnalysis
    fredholm_index: int
    invertibility_margin: float
    trace_powers: Dict[int, float]
    distance: SymmetryDistance
    intertwiner_exists: bool
    intertwiner_residuals: Optional[Dict[str, float]]

    def __post_init__(self):
        odd = {k: v for k, v in self.trace_powers.items() if k % 2}
        if any(round(v) != self.fredholm_index for v in odd.values()):
            raise ValueError(
                f"odd trace powers {odd} disagree with index {self.fredholm_index}"
            )


def analyze_pair(dec: HalmosDecomposition) -> PairReport:
    """Every pair-level quantity, plus the residuals of the default intertwiner."""
    exists = intertwiner_exists(dec)
    residuals = intertwiner_residuals(dec, build_intertwiner(dec)) if exists else None
    return PairReport(
        dims=dec.dims,
        h_values=dec.h_values,
        diff_spectrum=diff_spectrum(dec),
        anticommutator=anticommutator_analysis(dec),
        fredholm_index=fredholm_index(dec),
        invertibility_margin=invertibility_margin(dec),
        trace_powers={k: trace_power_diff(dec, k) for k in TRACE_POWERS},
        distance=symmetry_distance(dec),
        intertwiner_exists=exists,
        intertwiner_residuals=residuals,
    )
