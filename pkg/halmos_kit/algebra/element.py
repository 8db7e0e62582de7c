"""Elements of the algebra generated by a projection pair.

In the adapted basis of a decomposition, every element of the algebra is a
scalar on each of the four blocks M00, M01, M10, M11 and a 2x2 matrix (the
symbol, or fiber) on the plane spanned by the j-th column of M and the j-th
column of M'. All arithmetic below is coefficientwise and fiberwise.
"""

from dataclasses import dataclass
from numbers import Number
from typing import Dict, Mapping, Optional

import numpy as np

from ..canonical import (
    P_COEFFICIENTS,
    Q_COEFFICIENTS,
    SUBSPACE_LABELS,
    HalmosDecomposition,
    embed,
    projection_fibers,
)
from ..errors import DecompositionMismatch, SizeMismatch
from ..linalg import CMatrix, adjoint, distinct_values


@dataclass(frozen=True)
class Fiber:
    matrix: np.ndarray
    value: float

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    decomposition: HalmosDecomposition
    coefficients: Dict[str, complex]
    fibers: np.ndarray

    def __post_init__(self):
        dims = self.decomposition.dims
        present = {label for label in SUBSPACE_LABELS if dims.subspace(label)}
        given = set(self.coefficients)
        if given - present:
            raise SizeMismatch(
                f"coefficients given for empty blocks {sorted(given - present)}",
                invariant="coefficient presence matches dims",
            )
        coefficients = {
            label: complex(self.coefficients.get(label, 0.0))
            for label in SUBSPACE_LABELS
            if label in present
        }
        object.__setattr__(self, "coefficients", coefficients)

        fibers = np.asarray(self.fibers, dtype=np.complex128)
        if fibers.size == 0:
            fibers = fibers.reshape(0, 2, 2)
        if fibers.shape != (dims.m, 2, 2):
            raise SizeMismatch(
                f"expected fibers of shape ({dims.m}, 2, 2), got {fibers.shape}",
                invariant="fiber count = m",
            )
        if not np.all(np.isfinite(fibers)):
            raise ValueError("fiber entries must be finite")
        object.__setattr__(self, "fibers", fibers)

    @property
    def m(self) -> int:
        return self.fibers.shape[0]

    def fiber(self, j: int) -> Fiber:
        return Fiber(matrix=self.fibers[j], value=float(self.decomposition.h_values[j]))

    def __iter__(self):
        return (self.fiber(j) for j in range(self.m))

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __rsub__(self, other):
        return add(-self, other)

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, Number):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Number):
            return scale(self, other)
        return mul(other, self)

    def __matmul__(self, other):
        return mul(self, other)

    def __repr__(self) -> str:
        coeffs = ", ".join(f"a{k}={v:.4g}" for k, v in self.coefficients.items())
        return f"AlgebraElement({coeffs}, m={self.m})"


def _lift(x, dec: HalmosDecomposition) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        if x.decomposition is not dec:
            raise DecompositionMismatch(
                "elements belong to different decompositions",
                invariant="shared decomposition",
            )
        return x
    if isinstance(x, Number):
        return scale(identity_element(dec), x)
    raise TypeError(f"cannot combine AlgebraElement with {type(x).__name__}")


def _common(x: AlgebraElement, y) -> AlgebraElement:
    return _lift(y, x.decomposition)


def element_from_parts(
    dec: HalmosDecomposition,
    coefficients: Mapping[str, complex],
    fibers: Optional[np.ndarray] = None,
) -> AlgebraElement:
    """Build an element, dropping coefficients of empty blocks."""
    kept = {k: v for k, v in coefficients.items() if dec.dims.subspace(k)}
    if fibers is None:
        fibers = np.zeros((dec.m, 2, 2), dtype=np.complex128)
    return AlgebraElement(dec, kept, fibers)


def zero_element(dec: HalmosDecomposition) -> AlgebraElement:
    return element_from_parts(dec, {})


def identity_element(dec: HalmosDecomposition) -> AlgebraElement:
    fibers = np.broadcast_to(np.eye(2, dtype=np.complex128), (dec.m, 2, 2)).copy()
    return element_from_parts(dec, dict.fromkeys(SUBSPACE_LABELS, 1.0), fibers)


def p_symbol(dec: HalmosDecomposition) -> AlgebraElement:
    p_fibers, _ = projection_fibers(dec.h_values)
    return element_from_parts(dec, P_COEFFICIENTS, p_fibers)


def q_symbol(dec: HalmosDecomposition) -> AlgebraElement:
    _, q_fibers = projection_fibers(dec.h_values)
    return element_from_parts(dec, Q_COEFFICIENTS, q_fibers)


def add(x: AlgebraElement, y) -> AlgebraElement:
    y = _common(x, y)
    coefficients = {k: v + y.coefficients[k] for k, v in x.coefficients.items()}
    return AlgebraElement(x.decomposition, coefficients, x.fibers + y.fibers)


def mul(x: AlgebraElement, y) -> AlgebraElement:
    y = _common(x, y)
    coefficients = {k: v * y.coefficients[k] for k, v in x.coefficients.items()}
    return AlgebraElement(x.decomposition, coefficients, x.fibers @ y.fibers)


def scale(x: AlgebraElement, c: complex) -> AlgebraElement:
    coefficients = {k: c * v for k, v in x.coefficients.items()}
    return AlgebraElement(x.decomposition, coefficients, c * x.fibers)


def adjoint_element(x: AlgebraElement) -> AlgebraElement:
    coefficients = {k: np.conj(v) for k, v in x.coefficients.items()}
    return AlgebraElement(x.decomposition, coefficients, adjoint(x.fibers))


def power(x: AlgebraElement, k: int) -> AlgebraElement:
    if k < 0:
        raise ValueError(f"negative power {k}; use inverse() instead")
    coefficients = {key: v**k for key, v in x.coefficients.items()}
    return AlgebraElement(
        x.decomposition, coefficients, np.linalg.matrix_power(x.fibers, k)
    )


def assemble(x: AlgebraElement) -> CMatrix:
    """The operator in the original coordinates."""
    T = x.decomposition.basis
    return T @ embed(x.decomposition.dims, x.coefficients, x.fibers) @ adjoint(T)


def trace(x: AlgebraElement) -> complex:
    dims = x.decomposition.dims
    total = sum(v * dims.subspace(k) for k, v in x.coefficients.items())
    return complex(total + np.trace(x.fibers, axis1=1, axis2=2).sum())


def spectrum(x: AlgebraElement, radius: float = 1e-8) -> np.ndarray:
    """Distinct eigenvalues: present coefficients and eigenvalues of every fiber."""
    values = list(x.coefficients.values())
    if x.m:
        values.extend(np.linalg.eigvals(x.fibers).ravel())
    return distinct_values(values, radius)


def operator_norm(x: AlgebraElement) -> float:
    norms = [abs(v) for v in x.coefficients.values()]
    if x.m:
        norms.extend(np.linalg.norm(x.fibers, ord=2, axis=(1, 2)))
    return float(max(norms, default=0.0))
