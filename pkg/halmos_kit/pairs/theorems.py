"""Pair-level invariants read off the canonical data.

Every quantity here is a closed formula in the block dimensions and the
H-spectrum; the oracle recomputes each of them from raw matrices.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from loguru import logger

from ..canonical import HalmosDecomposition
from ..errors import ToleranceViolation
from ..linalg import SubspaceBasis, distinct_values

GENERIC = "generic"
DEGENERATE = "degenerate"


def diff_spectrum(dec: HalmosDecomposition) -> np.ndarray:
    """Distinct eigenvalues of P - Q."""
    dims = dec.dims
    root = np.sqrt(1 - dec.h_values)
    values = list(root) + list(-root)
    if dims.d01:
        values.append(1.0)
    if dims.d10:
        values.append(-1.0)
    if dims.d00 + dims.d11:
        values.append(0.0)
    return distinct_values(values)


@dataclass(frozen=True)
class AnticommutatorAnalysis:
    spectrum: np.ndarray
    norm: float
    pq_norm: float
    invertible: bool


def anticommutator_analysis(dec: HalmosDecomposition) -> AnticommutatorAnalysis:
    """Spectrum and norm of PQ + QP, checked against |PQ|^2 + |PQ|."""
    dims, h = dec.dims, dec.h_values
    root = np.sqrt(h)
    values = list(h + root) + list(h - root)
    if dims.d00:
        values.append(2.0)
    if dims.d01 + dims.d10 + dims.d11:
        values.append(0.0)
    spectrum = distinct_values(values)
    norm = float(np.max(spectrum)) if spectrum.size else 0.0

    pq_norm = 1.0 if dims.d00 else 0.0
    if h.size:
        pq_norm = max(pq_norm, float(np.sqrt(h.max())))
    identity = abs(norm - (pq_norm**2 + pq_norm))
    if identity > 1e-9:
        raise ToleranceViolation(
            f"|PQ+QP| = {norm} differs from |PQ|^2 + |PQ| = "
            f"{pq_norm**2 + pq_norm} by {identity:.3e}",
            invariant="|PQ+QP| = |PQ|^2 + |PQ|",
        )
    invertible = bool(spectrum.size == 0 or np.min(np.abs(spectrum)) > 1e-8)
    return AnticommutatorAnalysis(
        spectrum=spectrum, norm=norm, pq_norm=pq_norm, invertible=invertible
    )


def fredholm_index(dec: HalmosDecomposition) -> int:
    return dec.dims.d01 - dec.dims.d10


def invertibility_margin(dec: HalmosDecomposition) -> float:
    """Smallest eigenvalue of H, 1.0 when there is no generic part."""
    if dec.m == 0:
        return 1.0
    margin = float(dec.h_values.min())
    if margin < 1e-6:
        logger.warning(f"H is nearly singular (smallest eigenvalue {margin:.3e})")
    return margin


def fredholm_operator(dec: HalmosDecomposition) -> Tuple[SubspaceBasis, SubspaceBasis]:
    """Kernel and cokernel of QP viewed as a map im P -> im Q: M01 and M10."""
    return SubspaceBasis(dec.block("01")), SubspaceBasis(dec.block("10"))


def trace_power_diff(dec: HalmosDecomposition, k: int) -> float:
    """tr (P - Q)^k."""
    if k < 1:
        raise ValueError(f"power must be at least 1, got {k}")
    dims = dec.dims
    if k % 2:
        return float(dims.d01 - dims.d10)
    n = k // 2
    return float(dims.d01 + dims.d10 + 2 * np.sum((1 - dec.h_values) ** n))


@dataclass(frozen=True)
class SymmetryDistance:
    x: float
    value: float
    regime: str


def symmetry_distance(dec: HalmosDecomposition) -> SymmetryDistance:
    """Distance from P to the projections R of the algebra with RUR = 0, U = 2Q - I.

    ``x`` is the norm of PUP. Without M00 and M01 the distance is
    sqrt((1 - sqrt(1 - x^2)) / 2); otherwise only R = 0 is admissible on those
    blocks and the distance is 1.
    """
    dims = dec.dims
    fiber_x = float(np.max(np.abs(2 * dec.h_values - 1))) if dec.m else 0.0
    if dims.d00 == 0 and dims.d01 == 0:
        value = float(np.sqrt((1 - np.sqrt(1 - fiber_x**2)) / 2))
        return SymmetryDistance(x=fiber_x, value=value, regime=GENERIC)

    # PUP is I on M00 and -I on M01
    return SymmetryDistance(x=1.0, value=1.0, regime=DEGENERATE)
