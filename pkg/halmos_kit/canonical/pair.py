from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from loguru import logger

from ..errors import NotHermitian, NotIdempotent, SizeMismatch
from ..linalg import (
    DEFAULT_TOLERANCES,
    CMatrix,
    SubspaceBasis,
    Tolerances,
    adjoint,
    as_cmatrix,
    hermitian_part,
    max_abs,
    null_basis,
    require_square,
    spectral_norm,
)

SUBSPACE_LABELS = ("00", "01", "10", "11")


@dataclass(frozen=True, eq=False)
class ProjectionPair:
    """Two orthogonal projections of the same size, certified by ``validate_pair``."""

    P: CMatrix
    Q: CMatrix

    @property
    def size(self) -> int:
        return self.P.shape[0]

    @property
    def identity(self) -> CMatrix:
        return np.eye(self.size, dtype=np.complex128)

    @property
    def difference(self) -> CMatrix:
        """A = P - Q."""
        return self.P - self.Q

    @property
    def complement_sum(self) -> CMatrix:
        """B = I - P - Q."""
        return self.identity - self.P - self.Q


def projection_residuals(M: CMatrix) -> Dict[str, float]:
    return {
        "hermitian": max_abs(M - adjoint(M)),
        "idempotent": max_abs(M @ M - M),
    }


def validate_pair(
    P: CMatrix, Q: CMatrix, tol: Tolerances = DEFAULT_TOLERANCES
) -> ProjectionPair:
    """Check that ``P`` and ``Q`` are orthogonal projections of equal size."""
    matrices = {"P": as_cmatrix(P, "P"), "Q": as_cmatrix(Q, "Q")}
    sizes = {name: require_square(M, name) for name, M in matrices.items()}
    if sizes["P"] != sizes["Q"]:
        raise SizeMismatch(
            f"P is {sizes['P']}x{sizes['P']} but Q is {sizes['Q']}x{sizes['Q']}",
            invariant="P and Q same size",
        )

    for name, M in matrices.items():
        residuals = projection_residuals(M)
        if residuals["hermitian"] > tol.hermitian:
            raise NotHermitian(
                f"{name} is not Hermitian (max |{name} - {name}*| = "
                f"{residuals['hermitian']:.3e})",
                invariant=f"{name} Hermitian",
            )
        if residuals["idempotent"] > tol.idempotent:
            raise NotIdempotent(
                f"{name} is not idempotent (max |{name}^2 - {name}| = "
                f"{residuals['idempotent']:.3e})",
                invariant=f"{name} idempotent",
            )

    logger.debug(f"Validated projection pair of size {sizes['P']}")
    return ProjectionPair(
        P=hermitian_part(matrices["P"]), Q=hermitian_part(matrices["Q"])
    )


def check_supersymmetry(pair: ProjectionPair) -> Tuple[float, float]:
    """Residuals of A^2 + B^2 = I and AB + BA = 0 for A = P - Q, B = I - P - Q."""
    A, B = pair.difference, pair.complement_sum
    square = spectral_norm(A @ A + B @ B - pair.identity)
    anticommutator = spectral_norm(A @ B + B @ A)
    return square, anticommutator


def subspace_m(
    pair: ProjectionPair, i: int, j: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> SubspaceBasis:
    """Basis of M_ij: M00 = im P & im Q, M01 = im P & ker Q, M10 = ker P & im Q,
    M11 = ker P & ker Q.

    The intersection of null spaces is the null space of the sum of the
    (positive semidefinite) complementary projections.
    """
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError(f"subspace indices must be 0 or 1, got ({i}, {j})")
    I = pair.identity
    kills_p = I - pair.P if i == 0 else pair.P
    kills_q = I - pair.Q if j == 0 else pair.Q
    return null_basis(kills_p + kills_q, tol.null)
