from dataclasses import dataclass
from typing import Any

import numpy as np

from ..errors import NonFiniteEntries, SizeMismatch, ToleranceViolation
from .config import DEFAULT_TOLERANCES

# Dense complex matrix; every operator symbol of the toolkit is one of these.
CMatrix = np.ndarray


def as_cmatrix(data: Any, name: str = "matrix") -> CMatrix:
    """Coerce ``data`` to a 2-D complex128 array with finite entries."""
    arr = np.asarray(data, dtype=np.complex128)
    if arr.ndim != 2:
        raise SizeMismatch(
            f"{name} must be 2-D, got {arr.ndim}-D", invariant=f"{name} is a matrix"
        )
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntries(
            f"{name} has NaN or Inf entries", invariant=f"{name} entries finite"
        )
    return arr


def require_square(M: CMatrix, name: str = "matrix") -> int:
    rows, cols = M.shape
    if rows != cols:
        raise SizeMismatch(
            f"{name} must be square, got {rows}x{cols}", invariant=f"{name} square"
        )
    return rows


def max_abs(M: np.ndarray) -> float:
    if M.size == 0:
        return 0.0
    return float(np.max(np.abs(M)))


def spectral_norm(M: np.ndarray) -> float:
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def adjoint(M: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(M, -1, -2))


def hermitian_part(M: CMatrix) -> CMatrix:
    return 0.5 * (M + adjoint(M))


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal columns spanning a subspace of C^n."""

    columns: np.ndarray

    def __post_init__(self):
        cols = np.asarray(self.columns, dtype=np.complex128)
        if cols.ndim != 2:
            raise SizeMismatch(
                "basis columns must form a 2-D array", invariant="basis is a matrix"
            )
        object.__setattr__(self, "columns", cols)
        gram = adjoint(cols) @ cols
        residual = max_abs(gram - np.eye(cols.shape[1]))
        if residual > DEFAULT_TOLERANCES.orth * max(1, cols.shape[1]):
            raise ToleranceViolation(
                f"basis columns are not orthonormal (residual {residual:.3e})",
                invariant="columns orthonormal",
            )

    @classmethod
    def empty(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(np.zeros((ambient_dim, 0), dtype=np.complex128))

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(np.eye(ambient_dim, dtype=np.complex128))

    @property
    def ambient_dim(self) -> int:
        return self.columns.shape[0]

    @property
    def dim(self) -> int:
        return self.columns.shape[1]

    def projector(self) -> CMatrix:
        return self.columns @ adjoint(self.columns)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient_dim={self.ambient_dim})"
