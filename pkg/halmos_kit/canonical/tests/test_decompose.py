import unittest

import numpy as np

from halmos_kit.canonical import (
    Dims,
    HalmosDecomposition,
    RandomPairSpec,
    balanced_form,
    generate_pair,
    halmos_decompose,
    is_commuting,
    is_generic,
    reconstruct,
    validate_pair,
)
from halmos_kit.errors import InvalidSpec, NotAPair, ToleranceViolation
from halmos_kit.linalg import unitarity_residual
from halmos_kit.testing import canonical_pair, q2, random_pair, random_spec


class TestHalmosDecompose(unittest.TestCase):
    def test_canonical_2x2(self):
        dec = halmos_decompose(canonical_pair(0.25))
        self.assertEqual(dec.dims, Dims(0, 0, 0, 0, 1))
        np.testing.assert_allclose(dec.h_values, [0.25], atol=1e-12)
        self.assertTrue(is_generic(dec))
        self.assertFalse(is_commuting(dec))

    def test_equal_projections(self):
        pair, _ = random_pair(d00=3, d11=2, seed=4)
        P = pair.P
        dec = halmos_decompose(validate_pair(P, P))
        self.assertEqual(dec.dims, Dims(3, 0, 0, 2, 0))
        self.assertTrue(is_commuting(dec))

    def test_round_trip_fixed_spec(self):
        pair, truth = random_pair(1, 1, 1, 1, h_values=(0.3, 0.7), seed=0)
        dec = halmos_decompose(pair)
        self.assertEqual(dec.dims, truth.dims)
        np.testing.assert_allclose(dec.h_values, [0.3, 0.7], atol=1e-8)
        self.assertLess(unitarity_residual(dec.basis), 1e-9)

        rebuilt = reconstruct(dec)
        np.testing.assert_allclose(rebuilt.P, pair.P, atol=1e-8)
        np.testing.assert_allclose(rebuilt.Q, pair.Q, atol=1e-8)

    def test_round_trip_random_specs(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            spec = random_spec(rng)
            pair, truth = generate_pair(spec)
            dec = halmos_decompose(pair)
            self.assertEqual(dec.dims, truth.dims)
            np.testing.assert_allclose(
                dec.h_values, np.sort(spec.h_values), atol=1e-8
            )

    def test_repeated_h_values_stay_separate_fibers(self):
        pair, _ = random_pair(h_values=(0.4, 0.4, 0.4), seed=8)
        dec = halmos_decompose(pair)
        self.assertEqual(dec.m, 3)
        np.testing.assert_allclose(dec.h_values, [0.4, 0.4, 0.4], atol=1e-8)

    def test_fiber_layout(self):
        pair, _ = random_pair(h_values=(0.2,), d01=1, seed=5)
        dec = halmos_decompose(pair)
        F = dec.fiber_basis(0)
        compressed = F.conj().T @ pair.Q @ F
        s = np.sqrt(0.2 * 0.8)
        np.testing.assert_allclose(compressed, [[0.2, s], [s, 0.8]], atol=1e-9)
        np.testing.assert_allclose(F.conj().T @ pair.P @ F, np.diag([1, 0]), atol=1e-9)

    def test_columns_have_positive_leading_entry(self):
        pair, _ = random_pair(2, 1, 0, 1, h_values=(0.5,), seed=9)
        dec = halmos_decompose(pair)
        for label in ("00", "01", "11", "M"):
            block = dec.block(label)
            for k in range(block.shape[1]):
                col = block[:, k]
                lead = col[np.flatnonzero(np.abs(col) > 1e-8)[0]]
                self.assertAlmostEqual(lead.imag, 0.0, places=10)
                self.assertGreater(lead.real, 0.0)

    def test_deterministic(self):
        pair, _ = random_pair(1, 0, 2, 1, h_values=(0.3, 0.6), seed=1)
        a = halmos_decompose(pair)
        b = halmos_decompose(pair)
        np.testing.assert_array_equal(a.basis, b.basis)

    def test_rejects_unvalidated_input(self):
        with self.assertRaises(NotAPair):
            halmos_decompose((np.eye(2), np.eye(2)))

    def test_gray_zone(self):
        # eigenvalue of P - Q sits 1e-7 away from +1
        h = 1 - (1 - 1e-7) ** 2
        pair = validate_pair(np.diag([1.0, 0.0]), q2(h))
        with self.assertRaises(ToleranceViolation):
            halmos_decompose(pair)


class TestReconstruct(unittest.TestCase):
    def test_scalar_block(self):
        dec = HalmosDecomposition(basis=np.eye(1), dims=Dims(1, 0, 0, 0, 0), h_values=[])
        pair = reconstruct(dec)
        np.testing.assert_allclose(pair.P, [[1]])
        np.testing.assert_allclose(pair.Q, [[1]])

    def test_fiber_identity_basis(self):
        dec = HalmosDecomposition(
            basis=np.eye(2), dims=Dims(0, 0, 0, 0, 1), h_values=[0.5]
        )
        pair = reconstruct(dec)
        np.testing.assert_allclose(pair.P, np.diag([1, 0]))
        np.testing.assert_allclose(pair.Q, [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)

    def test_invalid_decompositions(self):
        with self.assertRaises(ToleranceViolation):
            HalmosDecomposition(basis=np.eye(3), dims=Dims(0, 0, 0, 0, 1), h_values=[0.5])
        with self.assertRaises(ToleranceViolation):
            HalmosDecomposition(basis=np.eye(2), dims=Dims(0, 0, 0, 0, 1), h_values=[1.0])


class TestBalancedForm(unittest.TestCase):
    def test_swap_intertwines(self):
        pair, _ = random_pair(1, 0, 0, 1, h_values=(0.15, 0.65), seed=3)
        dec = halmos_decompose(pair)
        P_b, Q_b, basis = balanced_form(dec)
        m = dec.m
        np.testing.assert_allclose(basis.conj().T @ pair.P @ basis, P_b, atol=1e-9)
        np.testing.assert_allclose(basis.conj().T @ pair.Q @ basis, Q_b, atol=1e-9)
        swap = np.block(
            [[np.zeros((m, m)), np.eye(m)], [np.eye(m), np.zeros((m, m))]]
        )
        np.testing.assert_allclose(swap @ P_b @ swap, Q_b, atol=1e-12)


class TestGeneratePair(unittest.TestCase):
    def test_commuting_spec(self):
        pair, truth = generate_pair(RandomPairSpec(d00=2, seed=1))
        np.testing.assert_allclose(pair.P, pair.Q, atol=1e-12)
        self.assertEqual(int(round(np.trace(pair.P).real)), 2)

    def test_seed_reproducible(self):
        spec = RandomPairSpec(d01=1, m=2, h_values=(0.3, 0.6), seed=42)
        a, _ = generate_pair(spec)
        b, _ = generate_pair(spec)
        np.testing.assert_array_equal(a.P, b.P)
        np.testing.assert_array_equal(a.Q, b.Q)

    def test_difference_spectrum(self):
        spec = RandomPairSpec(m=3, h_values=(0.2, 0.5, 0.9), seed=7)
        pair, _ = generate_pair(spec)
        evals = np.sort(np.linalg.eigvalsh(pair.difference))
        r = np.sqrt([0.8, 0.5, 0.1])
        np.testing.assert_allclose(evals, np.sort(np.concatenate([r, -r])), atol=1e-10)

    def test_invalid_specs(self):
        with self.assertRaises(InvalidSpec):
            RandomPairSpec(m=1, h_values=(1.0,))
        with self.assertRaises(InvalidSpec):
            RandomPairSpec(m=2, h_values=(0.5,))
        with self.assertRaises(InvalidSpec):
            RandomPairSpec(d00=-1)


if __name__ == "__main__":
    unittest.main()
