"""Halmos canonical decomposition of a pair of orthogonal projections.

The decomposition is built from the supersymmetry relations alone: with
A = P - Q and B = I - P - Q one has A^2 + B^2 = I and AB + BA = 0. The
eigenspaces of A at +1 and -1 are M01 and M10, B splits ker A into M00 and
M11, and on the rest B pairs the positive and negative spectral subspaces of
A. A polar factor and one more involution then bring the generic part into
the canonical 2x2 form.
"""

from dataclasses import dataclass
from typing import Dict, Mapping, NamedTuple, Tuple

import numpy as np
from loguru import logger

from ..errors import NotAPair, ToleranceViolation
from ..linalg import (
    DEFAULT_TOLERANCES,
    CMatrix,
    Tolerances,
    adjoint,
    hermitian_eig,
    hermitian_part,
    polar_unitary_part,
    psd_sqrt,
    spectral_norm,
)
from ..linalg.kernels import log_residual
from .pair import SUBSPACE_LABELS, ProjectionPair, check_supersymmetry


class Dims(NamedTuple):
    d00: int = 0
    d01: int = 0
    d10: int = 0
    d11: int = 0
    m: int = 0

    @property
    def n(self) -> int:
        return self.d00 + self.d01 + self.d10 + self.d11 + 2 * self.m

    def subspace(self, label: str) -> int:
        return getattr(self, f"d{label}")

    def offsets(self) -> Dict[str, int]:
        """Column offset of each block of the adapted basis."""
        out, start = {}, 0
        for label in SUBSPACE_LABELS:
            out[label] = start
            start += self.subspace(label)
        out["M"] = start
        out["M'"] = start + self.m
        return out

    def as_dict(self) -> Dict[str, int]:
        return dict(self._asdict())


@dataclass(frozen=True, eq=False)
class HalmosDecomposition:
    """Adapted orthonormal basis plus canonical data of a projection pair.

    Columns of ``basis`` are ordered M00 | M01 | M10 | M11 | M | M'. The j-th
    column of M and the j-th column of M' span the fiber attached to
    ``h_values[j]`` (ascending, with multiplicity).
    """

    basis: CMatrix
    dims: Dims
    h_values: np.ndarray

    def __post_init__(self):
        dims = Dims(*self.dims)
        object.__setattr__(self, "dims", dims)
        h = np.asarray(self.h_values, dtype=np.float64).reshape(-1)
        object.__setattr__(self, "h_values", h)
        T = np.asarray(self.basis, dtype=np.complex128)
        object.__setattr__(self, "basis", T)

        if any(d < 0 for d in dims):
            raise ToleranceViolation(f"negative dimension in {dims}")
        if T.shape != (dims.n, dims.n):
            raise ToleranceViolation(
                f"basis has shape {T.shape}, dims require {dims.n}x{dims.n}",
                invariant="d00+d01+d10+d11+2m = n",
            )
        if h.size != dims.m:
            raise ToleranceViolation(
                f"{h.size} H-eigenvalues for m = {dims.m}", invariant="len(h) = m"
            )
        if h.size and (h.min() <= 0.0 or h.max() >= 1.0):
            raise ToleranceViolation(
                f"H-eigenvalues must lie strictly inside (0, 1), got "
                f"[{h.min()}, {h.max()}]",
                invariant="0, 1 not eigenvalues of H",
            )

    @property
    def n(self) -> int:
        return self.dims.n

    @property
    def m(self) -> int:
        return self.dims.m

    def block(self, label: str) -> CMatrix:
        """Columns of one block: '00', '01', '10', '11', 'M' or "M'"."""
        offsets = self.dims.offsets()
        start = offsets[label]
        width = self.dims.m if label in ("M", "M'") else self.dims.subspace(label)
        return self.basis[:, start : start + width]

    def fiber_basis(self, j: int) -> CMatrix:
        """n x 2 matrix whose columns span the j-th fiber."""
        return np.stack([self.block("M")[:, j], self.block("M'")[:, j]], axis=1)


# Coefficients of P and Q on M00, M01, M10, M11.
P_COEFFICIENTS = {"00": 1.0, "01": 1.0, "10": 0.0, "11": 0.0}
Q_COEFFICIENTS = {"00": 1.0, "01": 0.0, "10": 1.0, "11": 0.0}


def projection_fibers(h_values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Stacked 2x2 fibers of P and Q at each H-eigenvalue."""
    h = np.asarray(h_values, dtype=np.float64)
    s = np.sqrt(h * (1 - h))
    p_fibers = np.zeros((h.size, 2, 2), dtype=np.complex128)
    p_fibers[:, 0, 0] = 1.0
    q_fibers = np.empty((h.size, 2, 2), dtype=np.complex128)
    q_fibers[:, 0, 0] = h
    q_fibers[:, 0, 1] = s
    q_fibers[:, 1, 0] = s
    q_fibers[:, 1, 1] = 1 - h
    return p_fibers, q_fibers


def embed(
    dims: Dims, coefficients: Mapping[str, complex], fibers: np.ndarray
) -> CMatrix:
    """Block matrix of an operator in the adapted basis.

    Scalars on the four M_ij blocks, and fiber j coupling the j-th column of
    M with the j-th column of M'.
    """
    D = np.zeros((dims.n, dims.n), dtype=np.complex128)
    offsets = dims.offsets()
    for label in SUBSPACE_LABELS:
        d = dims.subspace(label)
        if d:
            idx = np.arange(offsets[label], offsets[label] + d)
            D[idx, idx] = coefficients.get(label, 0.0)
    if dims.m:
        rows = np.arange(offsets["M"], offsets["M"] + dims.m)
        cols = rows + dims.m
        D[rows, rows] = fibers[:, 0, 0]
        D[rows, cols] = fibers[:, 0, 1]
        D[cols, rows] = fibers[:, 1, 0]
        D[cols, cols] = fibers[:, 1, 1]
    return D


def reconstruct(dec: HalmosDecomposition) -> ProjectionPair:
    """P and Q in the original coordinates from the canonical data."""
    T = dec.basis
    p_fibers, q_fibers = projection_fibers(dec.h_values)
    P = T @ embed(dec.dims, P_COEFFICIENTS, p_fibers) @ adjoint(T)
    Q = T @ embed(dec.dims, Q_COEFFICIENTS, q_fibers) @ adjoint(T)
    return ProjectionPair(P=hermitian_part(P), Q=hermitian_part(Q))


def is_commuting(dec: HalmosDecomposition) -> bool:
    return dec.m == 0


def is_generic(dec: HalmosDecomposition) -> bool:
    return all(dec.dims.subspace(label) == 0 for label in SUBSPACE_LABELS)


def balanced_involution(C: CMatrix, S: CMatrix) -> CMatrix:
    """Selfadjoint involution J with J P J = diag[I, 0] for the balanced pair.

    J = (I+S)^{-1/2} / sqrt(2) * [[I+S, -C], [-C, -(I+S)]], with C and S
    commuting and C^2 + S^2 = I.
    """
    m = C.shape[0]
    I = np.eye(m, dtype=np.complex128)
    shifted = I + S
    inv_root = np.linalg.inv(psd_sqrt(shifted))
    core = np.block([[shifted, -C], [-C, -shifted]])
    scale = np.kron(np.eye(2), inv_root)
    return hermitian_part(scale @ core) / np.sqrt(2.0)


def balanced_form(
    dec: HalmosDecomposition,
) -> Tuple[CMatrix, CMatrix, CMatrix]:
    """Balanced representation of the generic part.

    Returns ``(P_b, Q_b, basis)`` where ``basis`` (n x 2m) has orthonormal
    columns, ``basis* P basis = P_b = 1/2 [[I+S, -C], [-C, I-S]]`` and
    ``basis* Q basis = Q_b = 1/2 [[I-S, -C], [-C, I+S]]`` with C = sqrt(H),
    S = sqrt(I-H). In this form the block swap intertwines P with Q.
    """
    h = dec.h_values
    C = np.diag(np.sqrt(h)).astype(np.complex128)
    S = np.diag(np.sqrt(1 - h)).astype(np.complex128)
    m = dec.m
    I = np.eye(m, dtype=np.complex128)
    P_b = 0.5 * np.block([[I + S, -C], [-C, I - S]])
    Q_b = 0.5 * np.block([[I - S, -C], [-C, I + S]])
    generic = np.concatenate([dec.block("M"), dec.block("M'")], axis=1)
    basis = generic @ balanced_involution(C, S)
    return P_b, Q_b, basis


def _check_block(name: str, block: np.ndarray, tol: Tolerances) -> None:
    residual = spectral_norm(block) if block.size else 0.0
    log_residual(name, residual, tol.block)
    if residual > tol.block:
        raise ToleranceViolation(
            f"{name} should vanish but has norm {residual:.3e}",
            invariant=f"{name} = 0",
        )


def _cluster_spectrum(evals: np.ndarray, tol: Tolerances) -> Dict[str, np.ndarray]:
    """Split eigenvalues of A into {+1}, {-1}, {0}, positive and negative parts."""
    plus = np.abs(evals - 1) <= tol.gap
    minus = np.abs(evals + 1) <= tol.gap
    zero = np.abs(evals) <= tol.gap
    distance = np.min(np.abs(evals[:, None] - np.array([-1.0, 0.0, 1.0])), axis=1)
    gray = (distance > tol.gap) & (distance < tol.gray_zone)
    if np.any(gray):
        raise ToleranceViolation(
            f"eigenvalues of P - Q too close to {{-1, 0, 1}} to classify: "
            f"{evals[gray]}",
            invariant="sigma(A) separated from cluster boundary",
        )
    rest = ~(plus | minus | zero)
    return {
        "plus": plus,
        "minus": minus,
        "zero": zero,
        "positive": rest & (evals > 0),
        "negative": rest & (evals < 0),
    }


def _normalize_phases(columns: CMatrix, threshold: float = 1e-8) -> np.ndarray:
    """Unimodular factors making the first nonzero entry of each column real positive."""
    phases = np.ones(columns.shape[1], dtype=np.complex128)
    for k in range(columns.shape[1]):
        col = columns[:, k]
        nonzero = np.flatnonzero(np.abs(col) > threshold)
        if nonzero.size:
            lead = col[nonzero[0]]
            phases[k] = np.conj(lead) / abs(lead)
    return phases


def halmos_decompose(
    pair: ProjectionPair, tol: Tolerances = DEFAULT_TOLERANCES
) -> HalmosDecomposition:
    """Compute the canonical decomposition of ``pair``.

    Raises:
        NotAPair: input is not a certified projection pair or violates the
            supersymmetry relations.
        ToleranceViolation: an asserted vanishing block or consistency check
            exceeds ``10 * tol.residual``.
    """
    if not isinstance(pair, ProjectionPair):
        raise NotAPair(
            f"expected a ProjectionPair, got {type(pair).__name__}",
            invariant="input is a validated pair",
        )
    n = pair.size
    A, B = pair.difference, pair.complement_sum

    # 1. supersymmetry
    square, anticommutator = check_supersymmetry(pair)
    log_residual("A^2 + B^2 - I", square, tol.block)
    log_residual("AB + BA", anticommutator, tol.block)
    if square > tol.block or anticommutator > tol.block:
        raise NotAPair(
            f"supersymmetry relations fail (|A^2+B^2-I| = {square:.3e}, "
            f"|AB+BA| = {anticommutator:.3e})",
            invariant="A^2 + B^2 = I, AB + BA = 0",
        )

    # 2. eigenspaces of A at +1 (M01) and -1 (M10)
    evals, evecs = hermitian_eig(A, tol)
    parts = _cluster_spectrum(evals, tol)
    m01 = evecs[:, parts["plus"]]
    m10 = evecs[:, parts["minus"]]
    kernel = evecs[:, parts["zero"]]
    x_pos = evecs[:, parts["positive"]]
    x_neg = evecs[:, parts["negative"]]
    a_pos = evals[parts["positive"]]
    a_neg = -evals[parts["negative"]]
    logger.debug(
        f"sigma(P-Q) clusters: +1 x{m01.shape[1]}, -1 x{m10.shape[1]}, "
        f"0 x{kernel.shape[1]}, positive x{x_pos.shape[1]}, "
        f"negative x{x_neg.shape[1]}"
    )

    _check_block("B on M01", B @ m01, tol)
    _check_block("B on M10", B @ m10, tol)

    # 3. B restricted to ker A is an involution: -1 gives M00, +1 gives M11
    b_kernel, b_vecs = hermitian_eig(adjoint(kernel) @ B @ kernel, tol)
    off = np.abs(np.abs(b_kernel) - 1)
    if off.size and off.max() > tol.block:
        raise ToleranceViolation(
            f"B restricted to ker(P-Q) is not an involution "
            f"(eigenvalues {b_kernel[off > tol.block]})",
            invariant="B00^2 = I",
        )
    m00 = kernel @ b_vecs[:, b_kernel < 0]
    m11 = kernel @ b_vecs[:, b_kernel > 0]

    # 4. remaining space, ordered positive block | negative block
    m = x_pos.shape[1]
    if x_neg.shape[1] != m:
        raise ToleranceViolation(
            f"positive and negative spectral parts of P-Q differ in dimension "
            f"({m} vs {x_neg.shape[1]})",
            invariant="dim M = dim M'",
        )
    _check_block("B11", adjoint(x_pos) @ B @ x_pos, tol)
    _check_block("B22", adjoint(x_neg) @ B @ x_neg, tol)
    _check_block("B01", adjoint(kernel) @ B @ x_pos, tol)
    _check_block("B02", adjoint(kernel) @ B @ x_neg, tol)

    if m:
        # 5. polar step B12 = C V; V is folded into the negative block
        b12 = adjoint(x_pos) @ B @ x_neg
        V = polar_unitary_part(b12, tol)
        C = psd_sqrt(b12 @ adjoint(b12), tol)
        I_m = np.eye(m, dtype=np.complex128)
        S = psd_sqrt(I_m - C @ C, tol)
        _check_block("A+ - S", np.diag(a_pos) - S, tol)
        _check_block("V A- V* - S", V @ np.diag(a_neg) @ adjoint(V) - S, tol)
        y_neg = x_neg @ adjoint(V)

        # 6. involution to P = diag[I, 0]; H = C^2 is the compression of Q to M
        generic = np.concatenate([x_pos, y_neg], axis=1) @ balanced_involution(C, S)
        h_values, Z = hermitian_eig(hermitian_part(C @ C), tol)
        m_cols = generic[:, :m] @ Z
        m_prime_cols = generic[:, m:] @ Z
        fiber_phases = _normalize_phases(m_cols)
        m_cols = m_cols * fiber_phases
        m_prime_cols = m_prime_cols * fiber_phases
    else:
        h_values = np.zeros(0)
        m_cols = m_prime_cols = np.zeros((n, 0), dtype=np.complex128)

    blocks = [m00, m01, m10, m11]
    blocks = [b * _normalize_phases(b) for b in blocks]
    T = np.concatenate(blocks + [m_cols, m_prime_cols], axis=1)
    dims = Dims(*(b.shape[1] for b in blocks), m)
    logger.debug(f"Halmos dims {dims.as_dict()}, H-spectrum {h_values}")

    if h_values.size and (h_values.min() < tol.gap or h_values.max() > 1 - tol.gap):
        raise ToleranceViolation(
            f"H-spectrum leaves [{tol.gap}, {1 - tol.gap}]: {h_values}",
            invariant="0, 1 not eigenvalues of H",
        )
    _check_block("T*T - I", adjoint(T) @ T - np.eye(n), tol)

    dec = HalmosDecomposition(basis=T, dims=dims, h_values=h_values)
    rebuilt = reconstruct(dec)
    _check_block("reconstructed P - P", rebuilt.P - pair.P, tol)
    _check_block("reconstructed Q - Q", rebuilt.Q - pair.Q, tol)
    return dec
