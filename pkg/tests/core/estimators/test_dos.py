import unittest

import numpy as np

from dosfdr.core.errors import (BadAlphaError, BadCValueError,
                                DegenerateLambdaError, EmptySearchRangeError,
                                TooSmallError)
from dosfdr.core.estimators import (DosParams, dos_changepoint, dos_sequence,
                                    dos_storey, search_range, udos)
from dosfdr.core.pvalue_sample import validate_sample

FIXTURE = [0.01, 0.02, 0.05, 0.30, 0.60, 0.90]


def dos_sequence_loop(p, alpha):
    p = sorted(p)
    return [(p[2 * i - 1] - 2 * p[i - 1]) / i**alpha
            for i in range(1, len(p) // 2 + 1)]


class TestDosSequence(unittest.TestCase):
    def setUp(self):
        self.sample = validate_sample(FIXTURE)

    def test_alpha_1(self):
        seq = dos_sequence(self.sample, 1.0)
        np.testing.assert_allclose(seq, [0.0, 0.13, 0.266667], atol=1e-6)
        np.testing.assert_allclose(seq, dos_sequence_loop(FIXTURE, 1.0))

    def test_alpha_half(self):
        seq = dos_sequence(self.sample, 0.5)
        np.testing.assert_allclose(
            seq, [0.0, 0.183848, 0.461880], atol=1e-6)
        np.testing.assert_allclose(seq, dos_sequence_loop(FIXTURE, 0.5))

    def test_uniform_grid_is_zero(self):
        n = 10
        p = np.arange(1, n + 1) / (n + 1)
        for alpha in [0.5, 0.75, 1.0]:
            seq = dos_sequence(validate_sample(p), alpha)
            self.assertEqual(len(seq), n // 2)
            np.testing.assert_allclose(seq, 0.0, atol=1e-15)

    def test_odd_length(self):
        seq = dos_sequence(validate_sample(FIXTURE + [0.95]), 1.0)
        self.assertEqual(len(seq), 3)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(0)
        p = rng.random(101)**2
        seq = dos_sequence(validate_sample(p), 1.0)
        seq_perm = dos_sequence(validate_sample(rng.permutation(p)), 1.0)
        np.testing.assert_array_equal(seq, seq_perm)

    def test_errors(self):
        with self.assertRaises(TooSmallError):
            dos_sequence(validate_sample([0.1, 0.2, 0.3]), 1.0)
        with self.assertRaises(BadAlphaError):
            dos_sequence(self.sample, 0.4)
        with self.assertRaises(BadAlphaError):
            dos_sequence(self.sample, 1.1)


class TestDosChangepoint(unittest.TestCase):
    def setUp(self):
        self.sample = validate_sample(FIXTURE)

    def test_fixture(self):
        k_hat, lambda_ = dos_changepoint(self.sample, DosParams(1.0, 0.0))
        self.assertEqual(k_hat, 3)
        self.assertEqual(lambda_, 0.05)

    def test_forced_range(self):
        self.assertEqual(search_range(6, 0.4), (3, 3))
        k_hat, lambda_ = dos_changepoint(self.sample, DosParams(1.0, 0.4))
        self.assertEqual((k_hat, lambda_), (3, 0.05))

    def test_ties_go_to_smallest_index(self):
        # i / 16 is exact in binary, so every DOS term is exactly 0.
        p = np.arange(1, 16) / 16
        k_hat, lambda_ = dos_changepoint(
            validate_sample(p), DosParams(1.0, 0.0))
        self.assertEqual(k_hat, 1)
        self.assertEqual(lambda_, 1 / 16)

    def test_search_start_rounding(self):
        # 1000 * 0.011 is not exactly 11 in floating point.
        self.assertEqual(search_range(1000, 0.011), (11, 500))

    def test_empty_search_range(self):
        sample = validate_sample(FIXTURE + [0.95])
        with self.assertRaises(EmptySearchRangeError):
            dos_changepoint(sample, DosParams(1.0, 0.49))

    def test_bad_c(self):
        with self.assertRaises(BadCValueError):
            DosParams(1.0, 0.5)
        with self.assertRaises(BadCValueError):
            DosParams(1.0, -0.1)

    def test_scaling_invariance(self):
        rng = np.random.default_rng(1)
        p = np.concatenate([rng.random(30) * 0.05, rng.random(170)])
        params = DosParams(1.0, 0.0)
        k_hat, _ = dos_changepoint(validate_sample(p), params)
        k_scaled, _ = dos_changepoint(validate_sample(p * 0.5), params)
        self.assertEqual(k_hat, k_scaled)
        self.assertLessEqual(2 * k_hat, len(p))


class TestDosStorey(unittest.TestCase):
    def test_fixture(self):
        est = dos_storey(validate_sample(FIXTURE), DosParams(1.0, 0.0))
        self.assertEqual(est.k_hat, 3)
        self.assertEqual(est.lambda_, 0.05)
        self.assertAlmostEqual(est.pi1_raw, 0.473684, places=6)
        self.assertAlmostEqual(est.pi1, 0.473684, places=6)
        self.assertEqual(len(est.dos_sequence), 3)

    def test_uniform_grid(self):
        n = 15
        p = np.arange(1, n + 1) / (n + 1)
        est = dos_storey(validate_sample(p), DosParams(1.0, 0.0))
        self.assertEqual(est.k_hat, 1)
        self.assertAlmostEqual(est.pi1_raw, 1 / (n * (n + 1) - n))

    def test_clamping(self):
        # p_(k_hat) > k_hat / n gives a negative raw estimate.
        p = [0.5, 0.51, 0.52, 0.9, 0.95, 0.99]
        est = dos_storey(validate_sample(p), DosParams(1.0, 0.0))
        self.assertLess(est.pi1_raw, 0)
        self.assertEqual(est.pi1, 0.0)
        prop = est.to_proportion('DOS1')
        self.assertEqual(prop.pi0, 1.0)
        self.assertEqual(prop.pi1, 0.0)

    def test_degenerate_lambda(self):
        with self.assertRaises(DegenerateLambdaError):
            dos_storey(
                validate_sample([1.0, 1.0, 1.0, 1.0]), DosParams(1.0, 0.0))

    def test_to_proportion(self):
        est = dos_storey(validate_sample(FIXTURE), DosParams(1.0, 0.0))
        prop = est.to_proportion('DOS1')
        self.assertEqual(prop.method_tag, 'DOS1')
        self.assertEqual(prop.k_hat, 3)
        self.assertEqual(prop.lambda_used, 0.05)
        self.assertAlmostEqual(prop.pi0 + prop.pi1, 1.0)

    def test_conservative_support_boundary(self):
        # False null p-values b * U^2 live on [0, b] and are stochastically
        # smaller than U[0, b], so p_(k_hat) should not overshoot b.
        rng = np.random.default_rng(21)
        n, pi1, b = 4000, 0.2, 0.1
        n1 = int(n * pi1)
        lambdas = []
        for _ in range(40):
            p = np.concatenate([b * rng.random(n1)**2, rng.random(n - n1)])
            lambdas.append(
                dos_storey(validate_sample(p), DosParams(1.0, 0.0)).lambda_)
        self.assertLessEqual(np.mean(lambdas), b + 0.01)
        self.assertGreater(np.mean(lambdas), b / 2)


class TestUDos(unittest.TestCase):
    def test_fixture(self):
        est = udos(validate_sample(FIXTURE), DosParams(1.0, 0.0))
        self.assertEqual(est.pi1, 0.5)
        self.assertEqual(est.pi0, 0.5)
        self.assertEqual(est.k_hat, 3)

    def test_smallest_sample(self):
        est = udos(
            validate_sample([0.1, 0.2, 0.3, 0.4]), DosParams(1.0, 0.0))
        self.assertEqual(est.pi1, 0.25)

    def test_too_small(self):
        with self.assertRaises(TooSmallError):
            udos(validate_sample([0.1, 0.2, 0.3]), DosParams(1.0, 0.0))


if __name__ == '__main__':
    unittest.main()
