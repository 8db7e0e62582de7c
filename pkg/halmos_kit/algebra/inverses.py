"""Kernels, ranges and generalized inverses of algebra elements, fiber by fiber."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from ..errors import SingularElement
from ..linalg import (
    DEFAULT_TOLERANCES,
    SubspaceBasis,
    Tolerances,
    adjoint,
    complement_within,
)
from .element import AlgebraElement, adjoint_element
from .ranks import GRAY_FACTOR, coefficient_is_zero, fiber_threshold, rank_profile


def kernel_direction_closed_form(
    fiber: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES
) -> Optional[np.ndarray]:
    """Unit kernel vector (u chi_1, -chi_0) of a rank-one 2x2 fiber.

    With phi = sum |phi_ij|^2, chi_i = sqrt((|phi_0i|^2 + |phi_1i|^2) / phi) and
    u the phase of phi_01 conj(phi_00) + phi_11 conj(phi_10). Returns None when
    that phase is undefined (its argument is below ``tol.rank``).
    """
    F = np.asarray(fiber, dtype=np.complex128)
    phi = float(np.sum(np.abs(F) ** 2))
    if phi <= tol.absolute:
        return None
    argument = F[0, 1] * np.conj(F[0, 0]) + F[1, 1] * np.conj(F[1, 0])
    if abs(argument) <= tol.rank * phi:
        return None
    u = argument / abs(argument)
    chi0 = np.sqrt((abs(F[0, 0]) ** 2 + abs(F[1, 0]) ** 2) / phi)
    chi1 = np.sqrt((abs(F[0, 1]) ** 2 + abs(F[1, 1]) ** 2) / phi)
    return np.array([u * chi1, -chi0], dtype=np.complex128)


def _fiber_null_vector(fiber: np.ndarray) -> np.ndarray:
    _, _, Vh = np.linalg.svd(fiber)
    return Vh[-1].conj()


def kernel_basis(
    x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES
) -> SubspaceBasis:
    """Ker x: blocks with zero coefficient, whole Delta_0 fibers, one direction per
    Delta_1 fiber, mapped to the original coordinates."""
    dec = x.decomposition
    columns = [
        dec.block(label)
        for label, a in x.coefficients.items()
        if coefficient_is_zero(a, tol)
    ]
    profile = rank_profile(x, tol)
    for j in profile.delta0:
        columns.append(dec.fiber_basis(j))
    for j in profile.delta1:
        direction = _fiber_null_vector(x.fibers[j])
        closed = kernel_direction_closed_form(x.fibers[j], tol)
        if closed is not None:
            overlap = abs(np.vdot(closed, direction))
            if overlap < 1 - 1e-6:
                logger.warning(
                    f"closed-form kernel direction of fiber {j} deviates from the "
                    f"SVD null vector (overlap {overlap:.3e})"
                )
        columns.append(dec.fiber_basis(j) @ direction[:, None])
    if not columns:
        return SubspaceBasis.empty(dec.n)
    return SubspaceBasis(np.concatenate(columns, axis=1))


def range_basis(
    x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES
) -> SubspaceBasis:
    """im x as the orthogonal complement of Ker x*."""
    whole = SubspaceBasis.full(x.decomposition.n)
    return complement_within(kernel_basis(adjoint_element(x), tol), whole, tol)


def is_invertible(x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    if any(coefficient_is_zero(a, tol) for a in x.coefficients.values()):
        return False
    return len(rank_profile(x, tol).delta2) == x.m


def inverse(x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES) -> AlgebraElement:
    if not is_invertible(x, tol):
        raise SingularElement(
            "element is not invertible: a block coefficient vanishes or a fiber "
            "is singular",
            invariant="det fibers != 0 and a_ij != 0",
        )
    coefficients = {k: 1 / a for k, a in x.coefficients.items()}
    fibers = np.linalg.inv(x.fibers) if x.m else x.fibers
    return AlgebraElement(x.decomposition, coefficients, fibers)


def _reciprocal_or_zero(x: AlgebraElement, tol: Tolerances):
    return {
        k: 0j if coefficient_is_zero(a, tol) else 1 / a
        for k, a in x.coefficients.items()
    }


def moore_penrose(
    x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES
) -> AlgebraElement:
    """Pseudoinverse: reciprocal of nonzero coefficients, fiber SVD pseudoinverses."""
    coefficients = _reciprocal_or_zero(x, tol)
    if not x.m:
        return AlgebraElement(x.decomposition, coefficients, x.fibers)
    U, s, Vh = np.linalg.svd(x.fibers)
    threshold = fiber_threshold(s, tol)[:, None]
    s_inv = np.where(s > threshold, 1 / np.where(s > threshold, s, 1.0), 0.0)
    fibers = adjoint(Vh) @ (s_inv[:, :, None] * adjoint(U))
    return AlgebraElement(x.decomposition, coefficients, fibers)


@dataclass(frozen=True)
class DrazinResult:
    index: int
    inverse: AlgebraElement
    # smallest |det| over invertible fibers and |tr| over rank-one
    # non-nilpotent fibers; None when the set is empty
    det_margin: Optional[float]
    trace_margin: Optional[float]
    coincides_with_moore_penrose: bool


def drazin(x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES) -> DrazinResult:
    """Drazin inverse with its index.

    Invertible fibers are inverted, a rank-one fiber F with tr F != 0 maps to
    F / (tr F)^2 (as F^2 = tr F * F), nilpotent and zero fibers map to zero.
    The index is 0 for invertible elements, 2 when a nilpotent rank-one fiber
    is present and 1 otherwise.
    """
    profile = rank_profile(x, tol)
    coefficients = _reciprocal_or_zero(x, tol)
    fibers = np.zeros_like(x.fibers)
    if profile.delta2:
        idx = list(profile.delta2)
        fibers[idx] = np.linalg.inv(x.fibers[idx])
    for j in profile.delta11:
        fibers[j] = x.fibers[j] / profile.traces[j] ** 2

    if is_invertible(x, tol):
        index = 0
    elif profile.delta10:
        index = 2
    else:
        index = 1

    det_margin = (
        float(np.min(np.abs(np.linalg.det(x.fibers[list(profile.delta2)]))))
        if profile.delta2
        else None
    )
    trace_margin = (
        float(np.min(np.abs(profile.traces[list(profile.delta11)])))
        if profile.delta11
        else None
    )
    coincides = not profile.delta10 and all(
        _is_normal(x.fibers[j], tol) for j in profile.delta11
    )
    logger.debug(
        f"Drazin index {index}: |Delta2|={len(profile.delta2)}, "
        f"|Delta11|={len(profile.delta11)}, |Delta10|={len(profile.delta10)}"
    )
    return DrazinResult(
        index=index,
        inverse=AlgebraElement(x.decomposition, coefficients, fibers),
        det_margin=det_margin,
        trace_margin=trace_margin,
        coincides_with_moore_penrose=coincides,
    )


def _commutator_norm(F: np.ndarray) -> float:
    return float(np.linalg.norm(F @ adjoint(F) - adjoint(F) @ F, 2))


def _is_normal(F: np.ndarray, tol: Tolerances) -> bool:
    sigma = np.linalg.norm(F, 2)
    return _commutator_norm(F) <= max(tol.rank * sigma**2, tol.absolute)


HERMITIAN = "hermitian"
SINGULAR_NON_NORMAL = "singular_non_normal"
FAILS = "fails"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class CorResult:
    holds: bool
    coefficients_real: bool
    verdicts: Tuple[str, ...]
    indeterminate: bool

    def __bool__(self) -> bool:
        return self.holds


def _near(value: float, threshold: float) -> bool:
    return threshold / GRAY_FACTOR < value <= threshold * GRAY_FACTOR


def _fiber_cor_verdict(F: np.ndarray, tol: Tolerances) -> Tuple[str, bool]:
    s = np.linalg.svd(F, compute_uv=False)
    sigma = float(s[0])
    threshold = max(tol.rank * sigma, tol.absolute)
    commutator_threshold = max(tol.rank * sigma**2, tol.absolute)
    asymmetry = float(np.linalg.norm(F - adjoint(F), 2))
    commutator = _commutator_norm(F)
    borderline = _near(asymmetry, threshold) or (
        asymmetry > threshold
        and (_near(float(s[1]), threshold) or _near(commutator, commutator_threshold))
    )
    if asymmetry <= threshold:
        verdict = HERMITIAN
    elif s[1] <= threshold and commutator > commutator_threshold:
        verdict = SINGULAR_NON_NORMAL
    else:
        verdict = FAILS
    return verdict, borderline


def is_cor(x: AlgebraElement, tol: Tolerances = DEFAULT_TOLERANCES) -> CorResult:
    """Whether x and x* agree on the orthogonal complement of Ker x + Ker x*.

    Holds iff every present coefficient is real and every fiber is Hermitian
    or singular but not normal. Fibers too close to a threshold are reported
    as indeterminate; they still count with their nominal verdict in ``holds``.
    """
    imaginary = [abs(complex(a).imag) for a in x.coefficients.values()]
    coefficients_real = all(v <= tol.rank for v in imaginary)
    borderline = any(_near(v, tol.rank) for v in imaginary)
    verdicts, nominal = [], []
    for j, F in enumerate(x.fibers):
        verdict, near = _fiber_cor_verdict(F, tol)
        borderline |= near
        nominal.append(verdict)
        verdicts.append(INDETERMINATE if near else verdict)
        if near:
            logger.debug(f"CoR verdict of fiber {j} is borderline (nominal {verdict})")
    holds = coefficients_real and all(v != FAILS for v in nominal)
    return CorResult(
        holds=holds,
        coefficients_real=coefficients_real,
        verdicts=tuple(verdicts),
        indeterminate=borderline,
    )
