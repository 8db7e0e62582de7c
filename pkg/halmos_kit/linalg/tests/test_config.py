import unittest

from halmos_kit.errors import InvalidConfiguration
from halmos_kit.linalg import DEFAULT_TOLERANCES, TOLERANCE_ENV_VAR, Tolerances


class TestTolerances(unittest.TestCase):
    def test_defaults(self):
        tol = Tolerances()
        self.assertEqual(tol.gap, 1e-8)
        self.assertEqual(tol.gray_zone, 1e-6)
        self.assertAlmostEqual(tol.block, 1e-8)
        self.assertEqual(tol, DEFAULT_TOLERANCES)

    def test_from_dict(self):
        """Test Tolerances.from_dict method."""
        tol = Tolerances.from_dict({"gap": 1e-7, "rank": "1e-6"})
        self.assertEqual(tol.gap, 1e-7)
        self.assertEqual(tol.rank, 1e-6)
        self.assertEqual(tol.null, DEFAULT_TOLERANCES.null)

        # Test with extra parameters (should be ignored)
        tol = Tolerances.from_dict({"gap": 1e-7, "extra": "ignored"})
        self.assertEqual(tol.gap, 1e-7)
        self.assertFalse(hasattr(tol, "extra"))

    def test_round_trip_dict(self):
        tol = Tolerances(gap=2e-8)
        self.assertEqual(Tolerances.from_dict(tol.to_dict()), tol)

    def test_scaled(self):
        tol = DEFAULT_TOLERANCES.scaled(10)
        self.assertAlmostEqual(tol.gap, 1e-7)
        self.assertAlmostEqual(tol.idempotent, 1e-8)
        with self.assertRaises(InvalidConfiguration):
            DEFAULT_TOLERANCES.scaled(0)

    def test_rejects_non_positive(self):
        with self.assertRaises(InvalidConfiguration) as ctx:
            Tolerances(gap=-1.0)
        self.assertEqual(ctx.exception.invariant, "gap > 0")
        with self.assertRaises(ValueError):
            Tolerances(rank=0.0)

    def test_from_env(self):
        self.assertEqual(Tolerances.from_env({}), DEFAULT_TOLERANCES)
        self.assertEqual(Tolerances.from_env({TOLERANCE_ENV_VAR: " "}), DEFAULT_TOLERANCES)
        tol = Tolerances.from_env({TOLERANCE_ENV_VAR: "100"})
        self.assertAlmostEqual(tol.residual, 1e-7)
        with self.assertRaises(InvalidConfiguration):
            Tolerances.from_env({TOLERANCE_ENV_VAR: "tight"})
        with self.assertRaises(InvalidConfiguration):
            Tolerances.from_env({TOLERANCE_ENV_VAR: "-1"})


if __name__ == "__main__":
    unittest.main()
