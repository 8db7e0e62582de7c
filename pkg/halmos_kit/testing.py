"""Fixtures shared by the test suites of every sub-package."""

from typing import Sequence, Tuple

import numpy as np

from .canonical import (
    HalmosDecomposition,
    ProjectionPair,
    RandomPairSpec,
    generate_pair,
    validate_pair,
)


def q2(x: float) -> np.ndarray:
    """Projection onto the line through (sqrt(x), sqrt(1-x))."""
    s = np.sqrt(x * (1 - x))
    return np.array([[x, s], [s, 1 - x]], dtype=np.complex128)


def canonical_pair(x: float = 0.25) -> ProjectionPair:
    """P = diag[1, 0] against Q2(x): a generic 2x2 pair with H = x."""
    return validate_pair(np.diag([1.0, 0.0]), q2(x))


def random_pair(
    d00: int = 0,
    d01: int = 0,
    d10: int = 0,
    d11: int = 0,
    h_values: Sequence[float] = (),
    seed: int = 0,
) -> Tuple[ProjectionPair, HalmosDecomposition]:
    spec = RandomPairSpec(
        d00=d00,
        d01=d01,
        d10=d10,
        d11=d11,
        m=len(h_values),
        h_values=tuple(h_values),
        seed=seed,
    )
    return generate_pair(spec)


def random_spec(rng: np.random.Generator, max_size: int = 48) -> RandomPairSpec:
    """Random dims and well separated H-eigenvalues with total size <= max_size."""
    while True:
        d = rng.integers(0, 5, size=4)
        m = int(rng.integers(0, 8))
        if 0 < d.sum() + 2 * m <= max_size:
            break
    h = rng.uniform(0.05, 0.95, size=m)
    return RandomPairSpec(
        d00=int(d[0]),
        d01=int(d[1]),
        d10=int(d[2]),
        d11=int(d[3]),
        m=m,
        h_values=tuple(h),
        seed=int(rng.integers(0, 2**31)),
    )


def random_element(dec: HalmosDecomposition, rng: np.random.Generator, scale=1.0):
    """Element with complex Gaussian coefficients and fibers."""
    from .algebra import AlgebraElement

    coefficients = {
        label: complex(rng.standard_normal(), rng.standard_normal()) * scale
        for label in ("00", "01", "10", "11")
        if dec.dims.subspace(label)
    }
    fibers = (
        rng.standard_normal((dec.m, 2, 2)) + 1j * rng.standard_normal((dec.m, 2, 2))
    ) * scale
    return AlgebraElement(dec, coefficients, fibers)
