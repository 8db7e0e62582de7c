import unittest

import numpy as np

from halmos_kit.canonical import check_supersymmetry, subspace_m, validate_pair
from halmos_kit.errors import NotHermitian, NotIdempotent, SizeMismatch
from halmos_kit.testing import canonical_pair, q2, random_pair


class TestValidatePair(unittest.TestCase):
    def test_accepts_projections(self):
        pair = validate_pair(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
        self.assertEqual(pair.size, 2)
        np.testing.assert_allclose(pair.difference, np.diag([1, -1]))
        np.testing.assert_allclose(pair.complement_sum, np.zeros((2, 2)))

    def test_accepts_q2(self):
        Q = np.array([[0.25, 0.43301270189221935], [0.43301270189221935, 0.75]])
        pair = validate_pair(np.diag([1.0, 0.0]), Q)
        np.testing.assert_allclose(pair.Q, q2(0.25), atol=1e-15)

    def test_rejects_non_hermitian(self):
        with self.assertRaises(NotHermitian) as ctx:
            validate_pair(np.array([[1.0, 1.0], [0.0, 0.0]]), np.eye(2))
        self.assertEqual(ctx.exception.invariant, "P Hermitian")

    def test_rejects_non_idempotent(self):
        with self.assertRaises(NotIdempotent) as ctx:
            validate_pair(np.eye(2), 0.5 * np.eye(2))
        self.assertEqual(ctx.exception.invariant, "Q idempotent")

    def test_rejects_size_mismatch(self):
        with self.assertRaises(SizeMismatch):
            validate_pair(np.eye(2), np.eye(3))
        with self.assertRaises(SizeMismatch):
            validate_pair(np.ones((2, 3)), np.ones((2, 3)))


class TestSupersymmetry(unittest.TestCase):
    def test_random_pairs(self):
        for seed in range(5):
            pair, _ = random_pair(1, 2, 1, 3, h_values=(0.1, 0.4, 0.8), seed=seed)
            square, anticommutator = check_supersymmetry(pair)
            self.assertLess(square, 1e-10 * pair.size)
            self.assertLess(anticommutator, 1e-10 * pair.size)


class TestSubspaceM(unittest.TestCase):
    def test_identity_pair(self):
        pair = validate_pair(np.eye(2), np.eye(2))
        self.assertEqual(subspace_m(pair, 0, 0).dim, 2)
        self.assertEqual(subspace_m(pair, 1, 1).dim, 0)

    def test_projection_against_zero(self):
        pair = validate_pair(np.diag([1.0, 0.0]), np.zeros((2, 2)))
        m01 = subspace_m(pair, 0, 1)
        m11 = subspace_m(pair, 1, 1)
        self.assertEqual(m01.dim, 1)
        self.assertEqual(m11.dim, 1)
        np.testing.assert_allclose(np.abs(m01.columns[:, 0]), [1, 0], atol=1e-12)
        np.testing.assert_allclose(np.abs(m11.columns[:, 0]), [0, 1], atol=1e-12)
        self.assertEqual(subspace_m(pair, 0, 0).dim, 0)
        self.assertEqual(subspace_m(pair, 1, 0).dim, 0)

    def test_generic_pair_has_no_common_vectors(self):
        pair = canonical_pair(0.25)
        for i in (0, 1):
            for j in (0, 1):
                self.assertEqual(subspace_m(pair, i, j).dim, 0)

    def test_random_dims(self):
        pair, truth = random_pair(2, 1, 3, 1, h_values=(0.5, 0.6), seed=11)
        found = [subspace_m(pair, i, j).dim for i in (0, 1) for j in (0, 1)]
        self.assertEqual(found, [2, 1, 3, 1])

    def test_bad_indices(self):
        with self.assertRaises(ValueError):
            subspace_m(canonical_pair(), 2, 0)


if __name__ == "__main__":
    unittest.main()
