"""Brute-force reference computations on raw matrices.

Nothing here looks at a decomposition: every routine takes plain matrices and
answers with textbook dense linear algebra, so the formula-based modules can
be checked against it.
"""

from typing import Dict, Optional, Tuple, Union

import numpy as np
import scipy.linalg
import scipy.optimize
from loguru import logger

from ..algebra.words import WordExpression, parse_word
from ..linalg import DEFAULT_TOLERANCES, Tolerances

DEFAULT_RCOND = 1e-10


def brute_spectrum(M: np.ndarray) -> np.ndarray:
    """All eigenvalues of a general square matrix, with multiplicity."""
    M = np.asarray(M, dtype=np.complex128)
    if M.size == 0:
        return np.zeros(0, dtype=np.complex128)
    return np.sort_complex(scipy.linalg.eigvals(M))


def brute_null_space(M: np.ndarray, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if M.size == 0 or not np.any(M):
        return np.eye(M.shape[1], dtype=np.complex128)
    return scipy.linalg.null_space(M, rcond=rcond)


def brute_pinv(M: np.ndarray, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """Moore-Penrose inverse from a full SVD."""
    M = np.asarray(M, dtype=np.complex128)
    if M.size == 0:
        return M.conj().T.copy()
    U, s, Vh = scipy.linalg.svd(M, full_matrices=False)
    cutoff = rcond * (s[0] if s.size else 0.0)
    s_inv = np.zeros_like(s)
    keep = s > cutoff
    s_inv[keep] = 1 / s[keep]
    return (Vh.conj().T * s_inv) @ U.conj().T


def brute_drazin(
    M: np.ndarray, index: Optional[int] = None, rcond: float = DEFAULT_RCOND
) -> np.ndarray:
    """Drazin inverse A^k (A^(2k+1))^+ A^k.

    Any ``index`` at least the true Drazin index works; the default is the
    matrix size. Large indices amplify rounding, so pass a tighter bound when
    one is known.
    """
    M = np.asarray(M, dtype=np.complex128)
    k = M.shape[0] if index is None else index
    Ak = np.linalg.matrix_power(M, k)
    return Ak @ brute_pinv(np.linalg.matrix_power(M, 2 * k + 1), rcond) @ Ak


def brute_cor(M: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether M and M* agree on the orthogonal complement of Ker M + Ker M*."""
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[0]
    kernels = np.concatenate(
        [brute_null_space(M), brute_null_space(M.conj().T)], axis=1
    )
    if kernels.shape[1]:
        span = scipy.linalg.orth(kernels, rcond=DEFAULT_RCOND)
        complement = scipy.linalg.null_space(span.conj().T, rcond=DEFAULT_RCOND)
    else:
        complement = np.eye(n, dtype=np.complex128)
    if complement.shape[1] == 0:
        return True
    scale = max(1.0, np.linalg.norm(M, 2))
    return bool(np.linalg.norm((M - M.conj().T) @ complement, 2) <= tol * scale)


def brute_index(P: np.ndarray, Q: np.ndarray, gap: float = 1e-8) -> int:
    """dim Ker(P - Q - I) - dim Ker(P - Q + I) by counting eigenvalues."""
    evals = scipy.linalg.eigvalsh(np.asarray(P) - np.asarray(Q))
    return int(np.sum(np.abs(evals - 1) <= gap) - np.sum(np.abs(evals + 1) <= gap))


def _principal_vectors(
    P: np.ndarray, Q: np.ndarray, rcond: float = DEFAULT_RCOND
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Principal cosines and vectors between im P and im Q."""
    Xp = scipy.linalg.orth(np.asarray(P, dtype=np.complex128), rcond=rcond)
    Xq = scipy.linalg.orth(np.asarray(Q, dtype=np.complex128), rcond=rcond)
    if Xp.shape[1] == 0 or Xq.shape[1] == 0:
        n = np.asarray(P).shape[0]
        return np.zeros(0), np.zeros((n, 0)), np.zeros((n, 0))
    A, s, Bh = scipy.linalg.svd(Xp.conj().T @ Xq, full_matrices=False)
    return np.clip(s, 0.0, 1.0), Xp @ A, Xq @ Bh.conj().T


def brute_subspaces(
    P: np.ndarray, Q: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES
) -> Dict[str, Union[Tuple[int, ...], np.ndarray]]:
    """Canonical dimensions and H-spectrum from principal angles alone.

    Cosines equal to one between im P and im Q count towards M00, between
    ker P and ker Q towards M11; ranges minus their non-orthogonal directions
    give M01 and M10; the remaining squared cosines are the H-spectrum.
    Squared cosines are classified against [tol.gap, 1 - tol.gap], the same
    window the decomposition uses for H.
    """
    P = np.asarray(P, dtype=np.complex128)
    Q = np.asarray(Q, dtype=np.complex128)
    n = P.shape[0]
    I = np.eye(n)
    rank_p = scipy.linalg.orth(P, rcond=DEFAULT_RCOND).shape[1]
    rank_q = scipy.linalg.orth(Q, rcond=DEFAULT_RCOND).shape[1]

    cosines, _, _ = _principal_vectors(P, Q)
    kernel_cosines, _, _ = _principal_vectors(I - P, I - Q)
    sq = cosines**2
    d00 = int(np.sum(sq >= 1 - tol.gap))
    d11 = int(np.sum(kernel_cosines**2 >= 1 - tol.gap))
    nonorthogonal = int(np.sum(sq > tol.gap))
    generic = sq[(sq > tol.gap) & (sq < 1 - tol.gap)]
    return {
        "dims": (d00, rank_p - nonorthogonal, rank_q - nonorthogonal, d11, generic.size),
        "h_values": np.sort(generic),
    }


def _fiber_distance(U: np.ndarray, grid: int) -> float:
    """min |sin t| over unit vectors v(t) = (cos t, sin t) with v* U v = 0."""
    def f(t):
        v = np.array([np.cos(t), np.sin(t)])
        return float(np.real(v @ U @ v))

    ts = np.linspace(-np.pi / 2, np.pi / 2, grid + 1)
    values = np.array([f(t) for t in ts])
    best = 1.0
    for k in range(grid):
        a, b = values[k], values[k + 1]
        if a == 0.0:
            root = ts[k]
        elif a * b < 0:
            root = scipy.optimize.brentq(f, ts[k], ts[k + 1], xtol=1e-14)
        else:
            continue
        best = min(best, abs(np.sin(root)))
    return best


def brute_distance(
    P: np.ndarray,
    Q: np.ndarray,
    grid: int = 1000,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Distance from P to the projections R in the generated algebra with RUR = 0,
    U = 2Q - I, by searching each two-dimensional reducing plane."""
    P = np.asarray(P, dtype=np.complex128)
    Q = np.asarray(Q, dtype=np.complex128)
    cosines, left, right = _principal_vectors(P, Q)
    rank_p = scipy.linalg.orth(P, rcond=DEFAULT_RCOND).shape[1]
    # im P meeting im Q, or im P orthogonal to im Q: only R = 0 is allowed there
    sq = cosines**2
    if np.any(sq >= 1 - tol.gap) or np.sum(sq > tol.gap) < rank_p:
        return 1.0

    U = 2 * Q - np.eye(P.shape[0])
    worst = 0.0
    for sigma, u, w in zip(cosines, left.T, right.T):
        e2 = (w - sigma * u) / np.sqrt(1 - sigma**2)
        F = np.stack([u, e2], axis=1)
        plane = F.conj().T @ U @ F
        worst = max(worst, _fiber_distance(plane, grid))
    logger.debug(f"brute distance over {cosines.size} planes: {worst:.6f}")
    return worst


class MatrixBackend:
    """Evaluates words by plain matrix arithmetic."""

    def __init__(self, P: np.ndarray, Q: np.ndarray):
        P = np.asarray(P, dtype=np.complex128)
        self._generators = {
            "P": P,
            "Q": np.asarray(Q, dtype=np.complex128),
            "I": np.eye(P.shape[0], dtype=np.complex128),
        }

    def generator(self, name):
        return self._generators[name]

    def scalar(self, value):
        return value * self._generators["I"]

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x @ y

    def scale(self, x, c):
        return c * x

    def power(self, x, k):
        return np.linalg.matrix_power(x, k)


def brute_word(
    expression: Union[str, WordExpression], P: np.ndarray, Q: np.ndarray
) -> np.ndarray:
    if isinstance(expression, str):
        expression = parse_word(expression)
    return expression.evaluate(MatrixBackend(P, Q))


def intertwining_residuals(
    U: np.ndarray, P: np.ndarray, Q: np.ndarray
) -> Dict[str, float]:
    n = U.shape[0]
    if n == 0:
        return {"unitarity": 0.0, "UP-QU": 0.0, "UQ-PU": 0.0}
    return {
        "unitarity": float(np.linalg.norm(U.conj().T @ U - np.eye(n), 2)),
        "UP-QU": float(np.linalg.norm(U @ P - Q @ U, 2)),
        "UQ-PU": float(np.linalg.norm(U @ Q - P @ U, 2)),
    }


def brute_intertwiner_search(
    P: np.ndarray,
    Q: np.ndarray,
    attempts: int = 50,
    seed: int = 0,
    steps: int = 200,
    step_size: float = 0.1,
) -> float:
    """Smallest intertwining residual max(|UP - QU|, |UQ - PU|) found by
    projected gradient descent from random unitary starts."""
    P = np.asarray(P, dtype=np.complex128)
    Q = np.asarray(Q, dtype=np.complex128)
    n = P.shape[0]
    rng = np.random.default_rng(seed)
    best = np.inf
    for _ in range(attempts):
        Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        U, _ = scipy.linalg.polar(Z)
        for _ in range(steps):
            R1 = U @ P - Q @ U
            R2 = U @ Q - P @ U
            gradient = 2 * (R1 @ P - Q @ R1 + R2 @ Q - P @ R2)
            U, _ = scipy.linalg.polar(U - step_size * gradient)
        residuals = intertwining_residuals(U, P, Q)
        best = min(best, max(residuals["UP-QU"], residuals["UQ-PU"]))
    return float(best)
