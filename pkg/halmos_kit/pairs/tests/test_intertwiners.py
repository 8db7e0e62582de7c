import unittest

import numpy as np

from halmos_kit.algebra import assemble
from halmos_kit.canonical import halmos_decompose, random_unitary, validate_pair
from halmos_kit.errors import (
    Condition000Violated,
    InvalidParams,
    NoIntertwiner,
    NotUnimodular,
)
from halmos_kit.oracle import brute_intertwiner_search, intertwining_residuals
from halmos_kit.pairs import (
    IntertwinerParams,
    build_intertwiner,
    build_intertwiner_in_algebra,
    intertwiner_exists,
    intertwiners_all_in_algebra,
)
from halmos_kit.testing import canonical_pair, random_pair


class TestIntertwinerExists(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(intertwiner_exists(halmos_decompose(canonical_pair())))
        P = np.diag([1.0, 0.0, 0.0])
        dec = halmos_decompose(validate_pair(P, np.zeros((3, 3))))
        self.assertFalse(intertwiner_exists(dec))
        pair, _ = random_pair(0, 2, 2, 0, h_values=(0.4,), seed=1)
        self.assertTrue(intertwiner_exists(halmos_decompose(pair)))

    def test_all_in_algebra(self):
        self.assertTrue(intertwiners_all_in_algebra(halmos_decompose(canonical_pair())))
        pair, _ = random_pair(h_values=(0.4, 0.4), seed=2)
        self.assertFalse(intertwiners_all_in_algebra(halmos_decompose(pair)))
        pair, _ = random_pair(d00=2, h_values=(0.4,), seed=2)
        self.assertFalse(intertwiners_all_in_algebra(halmos_decompose(pair)))


class TestBuildIntertwiner(unittest.TestCase):
    def assert_intertwines(self, U, pair):
        residuals = intertwining_residuals(U, pair.P, pair.Q)
        for name, value in residuals.items():
            self.assertLess(value, 1e-8 * pair.size, name)

    def test_default_2x2(self):
        pair = canonical_pair(0.25)
        dec = halmos_decompose(pair)
        U = build_intertwiner(dec)
        T = dec.basis
        np.testing.assert_allclose(
            T.conj().T @ U @ T,
            [[0.5, np.sqrt(0.75)], [np.sqrt(0.75), -0.5]],
            atol=1e-9,
        )
        self.assert_intertwines(U, pair)

    def test_equal_projections(self):
        pair, _ = random_pair(d00=2, d11=3, seed=3)
        dec = halmos_decompose(validate_pair(pair.P, pair.P))
        self.assert_intertwines(build_intertwiner(dec), pair)

    def test_random_pairs_with_params(self):
        rng = np.random.default_rng(4)
        for seed in range(10):
            pair, _ = random_pair(2, 2, 2, 1, h_values=(0.1, 0.5, 0.85), seed=seed)
            dec = halmos_decompose(pair)
            phases = np.exp(1j * rng.uniform(0, 2 * np.pi, dec.m))
            params = IntertwinerParams(
                u0=random_unitary(2, rng),
                u1=random_unitary(1, rng),
                u01=random_unitary(2, rng),
                u10=random_unitary(2, rng),
                v=np.diag(phases),
            )
            self.assert_intertwines(build_intertwiner(dec, params), pair)

    def test_v_on_repeated_eigenvalue(self):
        rng = np.random.default_rng(5)
        pair, _ = random_pair(h_values=(0.3, 0.3), seed=5)
        dec = halmos_decompose(pair)
        params = IntertwinerParams(v=random_unitary(2, rng))
        self.assert_intertwines(build_intertwiner(dec, params), pair)

    def test_invalid_params(self):
        pair, _ = random_pair(h_values=(0.3, 0.6), seed=6)
        dec = halmos_decompose(pair)
        with self.assertRaises(InvalidParams):
            build_intertwiner(dec, IntertwinerParams(v=np.array([[0, 1], [1, 0]])))
        with self.assertRaises(InvalidParams):
            build_intertwiner(dec, IntertwinerParams(v=2 * np.eye(2)))
        with self.assertRaises(InvalidParams):
            build_intertwiner(dec, IntertwinerParams(v=np.eye(3)))

    def test_no_intertwiner(self):
        pair, _ = random_pair(0, 2, 1, 0, h_values=(0.5,), seed=7)
        dec = halmos_decompose(pair)
        with self.assertRaises(NoIntertwiner):
            build_intertwiner(dec)
        self.assertGreater(brute_intertwiner_search(pair.P, pair.Q, attempts=50), 1e-3)


class TestIntertwinerInAlgebra(unittest.TestCase):
    def test_matches_default(self):
        dec = halmos_decompose(canonical_pair(0.25))
        element = build_intertwiner_in_algebra(dec)
        np.testing.assert_allclose(assemble(element), build_intertwiner(dec), atol=1e-12)

    def test_phases(self):
        pair, _ = random_pair(d00=1, d11=2, h_values=(0.2, 0.7), seed=8)
        dec = halmos_decompose(pair)
        element = build_intertwiner_in_algebra(dec, a0=1j, a1=-1, phi=[-1, np.exp(0.3j)])
        U = assemble(element)
        residuals = intertwining_residuals(U, pair.P, pair.Q)
        self.assertLess(max(residuals.values()), 1e-8 * pair.size)
        default = build_intertwiner_in_algebra(dec)
        np.testing.assert_allclose(element.fibers[0], -default.fibers[0])

    def test_rejections(self):
        pair, _ = random_pair(d01=1, d10=1, h_values=(0.5,), seed=9)
        with self.assertRaises(Condition000Violated):
            build_intertwiner_in_algebra(halmos_decompose(pair))
        dec = halmos_decompose(canonical_pair())
        with self.assertRaises(NotUnimodular):
            build_intertwiner_in_algebra(dec, phi=[0.5])
        with self.assertRaises(NotUnimodular):
            build_intertwiner_in_algebra(dec, a0=2.0)


if __name__ == "__main__":
    unittest.main()
