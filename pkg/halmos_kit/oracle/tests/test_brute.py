import unittest

import numpy as np

from halmos_kit.canonical import halmos_decompose
from halmos_kit.linalg import DEFAULT_TOLERANCES
from halmos_kit.oracle import (
    brute_cor,
    brute_distance,
    brute_drazin,
    brute_index,
    brute_null_space,
    brute_pinv,
    brute_spectrum,
    brute_subspaces,
    brute_word,
)
from halmos_kit.pairs import symmetry_distance
from halmos_kit.testing import canonical_pair, random_pair

NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])


class TestDense(unittest.TestCase):
    def test_spectrum(self):
        np.testing.assert_allclose(brute_spectrum(np.diag([2.0, 1.0])), [1.0, 2.0])
        np.testing.assert_allclose(brute_spectrum(NILPOTENT), [0.0, 0.0])
        self.assertEqual(brute_spectrum(np.zeros((0, 0))).size, 0)

    def test_null_space(self):
        kernel = brute_null_space(NILPOTENT)
        self.assertEqual(kernel.shape, (2, 1))
        np.testing.assert_allclose(np.abs(kernel[:, 0]), [1.0, 0.0], atol=1e-12)
        self.assertEqual(brute_null_space(np.zeros((2, 2))).shape, (2, 2))

    def test_pinv(self):
        np.testing.assert_allclose(brute_pinv(np.ones((2, 2))), np.ones((2, 2)) / 4)
        np.testing.assert_allclose(brute_pinv(np.zeros((2, 2))), 0)
        np.testing.assert_allclose(brute_pinv(NILPOTENT), NILPOTENT.T)

    def test_drazin(self):
        A = np.array([[2.0, 1.0], [0.0, 3.0]])
        np.testing.assert_allclose(brute_drazin(A), np.linalg.inv(A), atol=1e-12)
        np.testing.assert_allclose(brute_drazin(NILPOTENT), 0, atol=1e-12)
        # idempotents are their own Drazin inverse
        P = canonical_pair(0.3).Q
        np.testing.assert_allclose(brute_drazin(P, index=1), P, atol=1e-12)

    def test_cor(self):
        self.assertTrue(brute_cor(np.array([[1.0, 2.0j], [-2.0j, 0.0]])))
        self.assertTrue(brute_cor(NILPOTENT))
        self.assertFalse(brute_cor(np.array([[1.0j]])))
        self.assertFalse(brute_cor(np.array([[1.0, 1.0], [0.0, 1.0]])))


class TestPairs(unittest.TestCase):
    def test_index(self):
        P = np.diag([1.0, 0.0])
        self.assertEqual(brute_index(P, np.zeros((2, 2))), 1)
        self.assertEqual(brute_index(np.zeros((2, 2)), P), -1)
        pair = canonical_pair()
        self.assertEqual(brute_index(pair.P, pair.Q), 0)

    def test_subspaces(self):
        pair, truth = random_pair(1, 2, 1, 3, h_values=(0.2, 0.6), seed=11)
        found = brute_subspaces(pair.P, pair.Q)
        self.assertEqual(found["dims"], tuple(truth.dims))
        np.testing.assert_allclose(found["h_values"], truth.h_values, atol=1e-9)

    def test_subspaces_near_one(self):
        # cos² = 1 - 5e-8 sits inside the window the decomposition accepts
        h = 1 - 5e-8
        pair, truth = random_pair(h_values=(h,), seed=4)
        found = brute_subspaces(pair.P, pair.Q)
        self.assertEqual(found["dims"], (0, 0, 0, 0, 1))
        self.assertEqual(found["dims"], tuple(truth.dims))
        np.testing.assert_allclose(found["h_values"], [h], atol=1e-12)

        wide = DEFAULT_TOLERANCES.scaled(10)
        self.assertEqual(brute_subspaces(pair.P, pair.Q, wide)["dims"], (1, 0, 0, 1, 0))

    def test_distance(self):
        pair = canonical_pair(0.5)
        self.assertAlmostEqual(brute_distance(pair.P, pair.Q), 0.0, places=7)
        pair = canonical_pair(0.8)
        self.assertAlmostEqual(brute_distance(pair.P, pair.Q), np.sqrt(0.1), delta=1e-6)
        P = np.diag([1.0, 0.0])
        self.assertEqual(brute_distance(P, P), 1.0)

    def test_distance_near_one(self):
        pair, _ = random_pair(h_values=(1 - 5e-8,), seed=4)
        formula = symmetry_distance(halmos_decompose(pair)).value
        self.assertLess(formula, 1.0)
        self.assertAlmostEqual(brute_distance(pair.P, pair.Q), formula, delta=1e-4)

    def test_word(self):
        pair = canonical_pair(0.4)
        np.testing.assert_allclose(
            brute_word("PQ - 2I", pair.P, pair.Q), pair.P @ pair.Q - 2 * np.eye(2)
        )
        np.testing.assert_allclose(
            brute_word("(P-Q)^2", pair.P, pair.Q),
            (pair.P - pair.Q) @ (pair.P - pair.Q),
            atol=1e-12,
        )


if __name__ == "__main__":
    unittest.main()
