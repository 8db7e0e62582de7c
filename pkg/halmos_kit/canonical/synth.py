from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np
from loguru import logger

from ..errors import InvalidSpec
from ..linalg import CMatrix
from .decompose import Dims, HalmosDecomposition, reconstruct
from .pair import ProjectionPair


@dataclass(frozen=True)
class RandomPairSpec:
    d00: int = 0
    d01: int = 0
    d10: int = 0
    d11: int = 0
    m: int = 0
    h_values: Sequence[float] = field(default_factory=tuple)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "h_values", tuple(float(h) for h in self.h_values)
        )
        for name in ("d00", "d01", "d10", "d11", "m"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise InvalidSpec(
                    f"{name} must be a non-negative integer, got {value!r}",
                    invariant="all dims >= 0",
                )
        if len(self.h_values) != self.m:
            raise InvalidSpec(
                f"expected {self.m} H-eigenvalues, got {len(self.h_values)}",
                invariant="len(h_values) = m",
            )
        for h in self.h_values:
            if not 0.0 < h < 1.0:
                raise InvalidSpec(
                    f"H-eigenvalue {h} is not strictly inside (0, 1)",
                    invariant="h_values in (0, 1)",
                )

    @property
    def dims(self) -> Dims:
        return Dims(self.d00, self.d01, self.d10, self.d11, self.m)


def random_unitary(n: int, rng: np.random.Generator) -> CMatrix:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    diag = np.diag(R)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    return Q * phases


def generate_pair(spec: RandomPairSpec) -> Tuple[ProjectionPair, HalmosDecomposition]:
    """Canonical pair for ``spec`` conjugated by a seeded random unitary.

    Returns the pair and its ground-truth decomposition (H-eigenvalues sorted
    ascending, the order ``halmos_decompose`` reports).
    """
    rng = np.random.default_rng(spec.seed)
    dims = spec.dims
    T = random_unitary(dims.n, rng)
    h = np.sort(np.asarray(spec.h_values, dtype=np.float64))
    truth = HalmosDecomposition(basis=T, dims=dims, h_values=h)
    pair = reconstruct(truth)
    logger.debug(f"Generated pair of size {dims.n} with dims {dims.as_dict()}")
    return pair, truth
