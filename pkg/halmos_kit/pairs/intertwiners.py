from dataclasses import dataclass
from typing import Dict, Optional, Sequence

import numpy as np
from loguru import logger

from ..algebra import AlgebraElement
from ..canonical import HalmosDecomposition, reconstruct
from ..errors import (
    Condition000Violated,
    InvalidParams,
    NoIntertwiner,
    NotUnimodular,
    ToleranceViolation,
)
from ..linalg import adjoint, spectral_norm, unitarity_residual


def intertwiner_exists(dec: HalmosDecomposition) -> bool:
    """A unitary U with UP = QU and UQ = PU exists iff dim M01 = dim M10."""
    return dec.dims.d01 == dec.dims.d10


def intertwiners_all_in_algebra(dec: HalmosDecomposition) -> bool:
    """Whether every intertwining unitary belongs to the algebra generated by P, Q.

    Holds when M01 and M10 are trivial, M00 and M11 are at most lines and H
    has simple spectrum, so that every admissible block is a function of H.
    """
    dims = dec.dims
    if dims.d01 or dims.d10 or dims.d00 > 1 or dims.d11 > 1:
        return False
    return bool(np.all(np.diff(dec.h_values) > 1e-8))


@dataclass(frozen=True)
class IntertwinerParams:
    """Free unitary blocks of an intertwiner; None means the identity.

    ``u01`` maps M10 onto M01, ``u10`` maps M01 onto M10, ``v`` acts on the
    generic part and must commute with H.
    """

    u0: Optional[np.ndarray] = None
    u1: Optional[np.ndarray] = None
    u01: Optional[np.ndarray] = None
    u10: Optional[np.ndarray] = None
    v: Optional[np.ndarray] = None


def _unitary_block(name: str, block: Optional[np.ndarray], size: int) -> np.ndarray:
    if block is None:
        return np.eye(size, dtype=np.complex128)
    block = np.asarray(block, dtype=np.complex128)
    if block.shape != (size, size):
        raise InvalidParams(
            f"{name} must be {size}x{size}, got {block.shape}",
            invariant=f"{name} shape",
        )
    if size and unitarity_residual(block) > 1e-9:
        raise InvalidParams(f"{name} is not unitary", invariant=f"{name} unitary")
    return block


def build_intertwiner(
    dec: HalmosDecomposition, params: Optional[IntertwinerParams] = None
) -> np.ndarray:
    """Unitary U intertwining P with Q, in the original coordinates.

    In the adapted basis U = U0 + U1 on M00 and M11, swaps M01 and M10 and acts
    as [[V sqrt(H), V sqrt(I-H)], [V sqrt(I-H), -V sqrt(H)]] on M + M'.
    """
    if not intertwiner_exists(dec):
        raise NoIntertwiner(
            f"dim M01 = {dec.dims.d01} differs from dim M10 = {dec.dims.d10}",
            invariant="dim M01 = dim M10",
        )
    params = params or IntertwinerParams()
    dims = dec.dims
    u0 = _unitary_block("u0", params.u0, dims.d00)
    u1 = _unitary_block("u1", params.u1, dims.d11)
    u01 = _unitary_block("u01", params.u01, dims.d01)
    u10 = _unitary_block("u10", params.u10, dims.d10)
    v = _unitary_block("v", params.v, dims.m)
    H = np.diag(dec.h_values)
    if spectral_norm(v @ H - H @ v) > 1e-8:
        raise InvalidParams("v does not commute with H", invariant="VH = HV")

    offsets = dims.offsets()
    U = np.zeros((dims.n, dims.n), dtype=np.complex128)

    def put(rows_label, cols_label, block):
        r, c = offsets[rows_label], offsets[cols_label]
        U[r : r + block.shape[0], c : c + block.shape[1]] = block

    put("00", "00", u0)
    put("11", "11", u1)
    put("01", "10", u01)
    put("10", "01", u10)
    root = np.diag(np.sqrt(dec.h_values))
    co_root = np.diag(np.sqrt(1 - dec.h_values))
    put("M", "M", v @ root)
    put("M", "M'", v @ co_root)
    put("M'", "M", v @ co_root)
    put("M'", "M'", -v @ root)

    T = dec.basis
    U = T @ U @ adjoint(T)
    residuals = intertwiner_residuals(dec, U)
    limit = 1e-8 * max(1, dims.n)
    if max(residuals.values()) > limit:
        raise ToleranceViolation(
            f"constructed intertwiner has residuals {residuals}",
            invariant="UP = QU, UQ = PU, U unitary",
        )
    logger.debug(f"intertwiner residuals {residuals}")
    return U


def intertwiner_residuals(dec: HalmosDecomposition, U: np.ndarray) -> Dict[str, float]:
    pair = reconstruct(dec)
    return {
        "unitarity": spectral_norm(adjoint(U) @ U - np.eye(dec.n)),
        "UP-QU": spectral_norm(U @ pair.P - pair.Q @ U),
        "UQ-PU": spectral_norm(U @ pair.Q - pair.P @ U),
    }


def build_intertwiner_in_algebra(
    dec: HalmosDecomposition,
    a0: complex = 1.0,
    a1: complex = 1.0,
    phi: Optional[Sequence[complex]] = None,
) -> AlgebraElement:
    """Intertwiner inside the algebra: a0 on M00, a1 on M11 and
    phi_j [[sqrt(h), sqrt(1-h)], [sqrt(1-h), -sqrt(h)]] on fiber j."""
    dims = dec.dims
    if dims.d01 or dims.d10:
        raise Condition000Violated(
            f"an intertwiner in the algebra needs M01 = M10 = 0, got dims "
            f"({dims.d01}, {dims.d10})",
            invariant="dim M01 = dim M10 = 0",
        )
    if phi is None:
        phi = np.ones(dims.m)
    phi = np.asarray(phi, dtype=np.complex128)
    if phi.shape != (dims.m,):
        raise InvalidParams(f"expected {dims.m} fiber phases, got {phi.shape}")
    moduli = np.abs(np.concatenate([[a0, a1], phi]))
    if np.any(np.abs(moduli - 1) > 1e-10):
        raise NotUnimodular(
            "a0, a1 and every fiber phase must have modulus one",
            invariant="|a0| = |a1| = |phi| = 1",
        )

    h = dec.h_values
    c, s = np.sqrt(h), np.sqrt(1 - h)
    fibers = np.empty((dims.m, 2, 2), dtype=np.complex128)
    fibers[:, 0, 0] = phi * c
    fibers[:, 0, 1] = phi * s
    fibers[:, 1, 0] = phi * s
    fibers[:, 1, 1] = -phi * c
    coefficients = {"00": a0, "11": a1}
    coefficients = {k: v for k, v in coefficients.items() if dims.subspace(k)}
    return AlgebraElement(dec, coefficients, fibers)
