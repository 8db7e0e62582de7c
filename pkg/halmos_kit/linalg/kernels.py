"""Dense complex linear-algebra kernels shared by every other module.

All routines are thin, validated wrappers around LAPACK through scipy.linalg;
they are pure functions and never mutate their inputs.
"""

from typing import Iterable, Sequence, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from ..errors import (
    NegativeEigenvalue,
    NoConvergence,
    NotContained,
    NotHermitian,
    SingularInput,
)
from .base import (
    CMatrix,
    SubspaceBasis,
    adjoint,
    as_cmatrix,
    hermitian_part,
    max_abs,
    require_square,
)
from .config import DEFAULT_TOLERANCES, Tolerances


def hermitian_eig(
    M: CMatrix, tol: Tolerances = DEFAULT_TOLERANCES
) -> Tuple[np.ndarray, CMatrix]:
    """Eigen-decomposition of a Hermitian matrix.

    Returns ascending real eigenvalues ``w`` and a unitary ``V`` with
    ``M @ V = V @ diag(w)``.
    """
    M = as_cmatrix(M)
    n = require_square(M)
    if n == 0:
        return np.zeros(0), np.zeros((0, 0), dtype=np.complex128)
    residual = max_abs(M - adjoint(M))
    if residual > tol.hermitian * max(1.0, max_abs(M)):
        raise NotHermitian(
            f"matrix is not Hermitian (max |M - M*| = {residual:.3e})",
            invariant="M Hermitian",
        )
    try:
        w, V = scipy.linalg.eigh(hermitian_part(M))
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"Hermitian eigensolver failed: {e}")
    return w, V


def svd(M: CMatrix) -> Tuple[CMatrix, np.ndarray, CMatrix]:
    """Full SVD ``M = U diag(s) V*`` with ``s`` descending; returns ``(U, s, V)``."""
    M = as_cmatrix(M)
    try:
        U, s, Vh = scipy.linalg.svd(M, full_matrices=True)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD failed: {e}")
    return U, s, adjoint(Vh)


def null_basis(M: CMatrix, tol: float = DEFAULT_TOLERANCES.null) -> SubspaceBasis:
    """Right singular vectors whose singular value is at most ``tol * sigma_max``.

    When ``sigma_max == 0`` every direction is null.
    """
    M = as_cmatrix(M)
    n = M.shape[1]
    if M.shape[0] == 0 or n == 0:
        return SubspaceBasis.full(n)
    try:
        basis = scipy.linalg.null_space(M, rcond=tol)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD failed: {e}")
    return SubspaceBasis(basis)


def range_basis(M: CMatrix, tol: float = DEFAULT_TOLERANCES.null) -> SubspaceBasis:
    """Left singular vectors whose singular value exceeds ``tol * sigma_max``."""
    M = as_cmatrix(M)
    if M.size == 0 or max_abs(M) == 0.0:
        return SubspaceBasis.empty(M.shape[0])
    try:
        basis = scipy.linalg.orth(M, rcond=tol)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD failed: {e}")
    return SubspaceBasis(basis)


def psd_sqrt(M: CMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> CMatrix:
    """Hermitian positive semidefinite square root."""
    w, V = hermitian_eig(M, tol)
    if w.size == 0:
        return np.zeros_like(V)
    floor = -tol.rank * max(1.0, float(np.max(np.abs(w))))
    if w[0] < floor:
        raise NegativeEigenvalue(
            f"matrix is not positive semidefinite (min eigenvalue {w[0]:.3e})",
            invariant="M positive semidefinite",
        )
    root = np.sqrt(np.clip(w, 0.0, None))
    return hermitian_part((V * root) @ adjoint(V))


def polar_unitary_part(M: CMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> CMatrix:
    """Unitary factor ``V`` of the left polar form ``M = sqrt(M M*) V``."""
    M = as_cmatrix(M)
    require_square(M)
    if M.shape[0] == 0:
        return M.copy()
    s = scipy.linalg.svdvals(M)
    if s[0] == 0.0 or s[-1] <= tol.null * s[0]:
        raise SingularInput(
            f"polar factor undefined for a singular matrix "
            f"(sigma_min/sigma_max = {s[-1] / s[0] if s[0] else 0.0:.3e})",
            invariant="M has zero kernel",
        )
    V, _ = scipy.linalg.polar(M, side="left")
    return V


def complement_within(
    sub: SubspaceBasis,
    container: SubspaceBasis,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SubspaceBasis:
    """Orthonormal basis of ``container`` minus ``sub`` (orthogonal complement inside)."""
    if sub.dim == 0:
        return container
    C, S = container.columns, sub.columns
    leak = max_abs(S - C @ (adjoint(C) @ S))
    if leak > tol.containment:
        raise NotContained(
            f"subspace is not contained in the container (leak {leak:.3e})",
            invariant="sub within container",
        )
    coords = adjoint(C) @ S
    if sub.dim == container.dim:
        return SubspaceBasis.empty(container.ambient_dim)
    rest = scipy.linalg.null_space(adjoint(coords), rcond=tol.null)
    return SubspaceBasis(C @ rest)


def subspace_angles(a: SubspaceBasis, b: SubspaceBasis) -> np.ndarray:
    """Principal angles between two subspaces, ascending.

    Missing directions (dimension mismatch) count as right angles.
    """
    if a.dim == 0 or b.dim == 0:
        return np.full(max(a.dim, b.dim), np.pi / 2)
    angles = scipy.linalg.subspace_angles(a.columns, b.columns)
    angles = np.sort(angles)
    extra = abs(a.dim - b.dim)
    if extra:
        # scipy reports min(dim) angles; the rest are orthogonal directions
        angles = np.concatenate([angles[: min(a.dim, b.dim)], np.full(extra, np.pi / 2)])
    return angles


def _order_key(z: complex) -> Tuple[float, float]:
    return (round(z.real, 9), round(z.imag, 9))


def distinct_values(values: Iterable[complex], radius: float = 1e-8) -> np.ndarray:
    """Collapse a multiset of numbers into a sorted set with clustering ``radius``."""
    kept = []
    for z in sorted((complex(v) for v in values), key=_order_key):
        if all(abs(z - k) > radius for k in kept):
            kept.append(z)
    out = np.array(kept, dtype=np.complex128)
    if out.size and np.all(np.abs(out.imag) <= radius):
        return out.real.copy()
    return out


def set_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Hausdorff distance between two finite point sets."""
    a = np.asarray(a, dtype=np.complex128).ravel()
    b = np.asarray(b, dtype=np.complex128).ravel()
    if a.size == 0 and b.size == 0:
        return 0.0
    if a.size == 0 or b.size == 0:
        return float("inf")
    gaps = np.abs(a[:, None] - b[None, :])
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))


def unitarity_residual(U: CMatrix) -> float:
    return max_abs(adjoint(U) @ U - np.eye(U.shape[1]))


def log_residual(label: str, value: float, limit: float) -> None:
    logger.debug(f"{label}: residual {value:.3e} (limit {limit:.1e})")
