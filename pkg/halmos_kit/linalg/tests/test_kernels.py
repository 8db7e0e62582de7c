import unittest

import numpy as np

from halmos_kit.errors import (
    NegativeEigenvalue,
    NonFiniteEntries,
    NotContained,
    NotHermitian,
    SingularInput,
    SizeMismatch,
    ToleranceViolation,
)
from halmos_kit.linalg import (
    SubspaceBasis,
    as_cmatrix,
    complement_within,
    distinct_values,
    hermitian_eig,
    null_basis,
    polar_unitary_part,
    psd_sqrt,
    range_basis,
    set_distance,
    subspace_angles,
    svd,
    unitarity_residual,
)


class TestBase(unittest.TestCase):
    def test_as_cmatrix(self):
        M = as_cmatrix([[1, 2], [3, 4]])
        self.assertEqual(M.dtype, np.complex128)
        with self.assertRaises(SizeMismatch):
            as_cmatrix([1, 2, 3])
        with self.assertRaises(NonFiniteEntries):
            as_cmatrix([[np.nan, 0], [0, 1]])
        with self.assertRaises(ValueError):
            as_cmatrix([[np.inf]])

    def test_subspace_basis(self):
        basis = SubspaceBasis(np.eye(3)[:, :2])
        self.assertEqual(basis.dim, 2)
        self.assertEqual(basis.ambient_dim, 3)
        np.testing.assert_allclose(basis.projector(), np.diag([1, 1, 0]), atol=1e-15)
        self.assertEqual(len(SubspaceBasis.empty(4)), 0)
        with self.assertRaises(ToleranceViolation):
            SubspaceBasis(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestKernels(unittest.TestCase):
    def test_hermitian_eig(self):
        M = np.array([[2, 1j], [-1j, 2]])
        w, V = hermitian_eig(M)
        np.testing.assert_allclose(w, [1, 3], atol=1e-12)
        np.testing.assert_allclose(M @ V, V * w, atol=1e-12)

        w, V = hermitian_eig(np.zeros((0, 0)))
        self.assertEqual(w.size, 0)

        with self.assertRaises(NotHermitian):
            hermitian_eig(np.array([[1, 1], [0, 1]]))

    def test_svd(self):
        M = np.array([[3, 0], [4, 0]], dtype=complex)
        U, s, V = svd(M)
        np.testing.assert_allclose(s, [5, 0], atol=1e-12)
        np.testing.assert_allclose(U[:, :2] @ np.diag(s) @ V.conj().T, M, atol=1e-12)

    def test_null_and_range_basis(self):
        M = np.array([[1, 1], [1, 1]], dtype=complex)
        kernel = null_basis(M)
        self.assertEqual(kernel.dim, 1)
        np.testing.assert_allclose(M @ kernel.columns, 0, atol=1e-12)
        image = range_basis(M)
        self.assertEqual(image.dim, 1)
        np.testing.assert_allclose(
            np.abs(image.columns[:, 0]), [2**-0.5, 2**-0.5], atol=1e-12
        )

        self.assertEqual(null_basis(np.eye(3)).dim, 0)
        self.assertEqual(null_basis(np.zeros((3, 3))).dim, 3)
        self.assertEqual(range_basis(np.zeros((3, 3))).dim, 0)

    def test_psd_sqrt(self):
        M = np.array([[5, 4], [4, 5]], dtype=complex)
        R = psd_sqrt(M)
        np.testing.assert_allclose(R @ R, M, atol=1e-12)
        np.testing.assert_allclose(R, [[2, 1], [1, 2]], atol=1e-12)
        with self.assertRaises(NegativeEigenvalue):
            psd_sqrt(np.diag([1.0, -1.0]))

    def test_polar_unitary_part(self):
        rng = np.random.default_rng(3)
        M = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        V = polar_unitary_part(M)
        self.assertLess(unitarity_residual(V), 1e-12)
        C = psd_sqrt(M @ M.conj().T)
        np.testing.assert_allclose(C @ V, M, atol=1e-10)
        with self.assertRaises(SingularInput):
            polar_unitary_part(np.diag([1.0, 0.0]))

    def test_complement_within(self):
        container = SubspaceBasis(np.eye(3)[:, :2])
        sub = SubspaceBasis(np.eye(3)[:, :1])
        rest = complement_within(sub, container)
        self.assertEqual(rest.dim, 1)
        np.testing.assert_allclose(np.abs(rest.columns[:, 0]), [0, 1, 0], atol=1e-12)
        with self.assertRaises(NotContained):
            complement_within(SubspaceBasis(np.eye(3)[:, 2:]), container)

    def test_subspace_angles(self):
        a = SubspaceBasis(np.array([[1.0], [0.0]]))
        b = SubspaceBasis(np.array([[np.cos(0.3)], [np.sin(0.3)]]))
        np.testing.assert_allclose(subspace_angles(a, b), [0.3], atol=1e-12)
        np.testing.assert_allclose(
            subspace_angles(a, SubspaceBasis.full(2)), [0.0, np.pi / 2], atol=1e-12
        )
        np.testing.assert_allclose(
            subspace_angles(SubspaceBasis.empty(2), a), [np.pi / 2], atol=1e-12
        )

    def test_distinct_values(self):
        values = distinct_values([1.0, 1.0 + 1e-12, -1.0, 0.5])
        np.testing.assert_allclose(values, [-1.0, 0.5, 1.0])
        self.assertEqual(values.dtype, np.float64)
        mixed = distinct_values([1j, -1j, 1j])
        self.assertEqual(mixed.size, 2)

    def test_set_distance(self):
        self.assertEqual(set_distance([], []), 0.0)
        self.assertAlmostEqual(set_distance([0, 1], [1, 0]), 0.0)
        self.assertAlmostEqual(set_distance([0, 1], [0]), 1.0)
        self.assertEqual(set_distance([0], []), float("inf"))


if __name__ == "__main__":
    unittest.main()
