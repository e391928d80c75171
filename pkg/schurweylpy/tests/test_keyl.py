# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
""" Tests the Keyl distribution and the tomography estimators
"""

from fractions import Fraction
import numpy as np
import pytest
from schurweylpy import keyl
from schurweylpy.linalg import density_from_spectrum, haar_unitary
from schurweylpy.utils import replica_rng, run_replicas


def assert_identity(report, sigmas=5.0):
    """Identity reports agree with their target within a few std errors"""
    assert abs(report.empirical_mean - report.bound) <= \
        sigmas * report.std_error + 1e-9


class TestKeylContext():
    """Test construction of the Keyl density"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.rng = np.random.default_rng(101)
        self.rho = density_from_spectrum((0.6, 0.3, 0.1),
                                         haar_unitary(3, self.rng))

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.rng, self.rho

    def test_context(self):
        """Spectrum, normalizer and envelope"""
        ctx = keyl.keyl_context((2, 1), self.rho)
        assert ctx.d == 3
        np.testing.assert_allclose(ctx.alpha, (0.6, 0.3, 0.1), atol=1e-12)
        assert 0 < ctx.phi <= ctx.envelope()

    def test_too_many_rows(self):
        """lam cannot have more rows than d"""
        with pytest.raises(ValueError):
            keyl.keyl_context((1, 1, 1, 1), self.rho)

    def test_rank_deficient(self):
        """Phi vanishes when lam is longer than the rank"""
        rho = density_from_spectrum((0.7, 0.3, 0.0))
        with pytest.raises(ValueError):
            keyl.keyl_context((1, 1, 1), rho)

    def test_density_positive(self):
        """The density is nonnegative on unitaries"""
        ctx = keyl.keyl_context((3, 1), self.rho)
        for _ in range(5):
            assert keyl.keyl_density(haar_unitary(3, self.rng), ctx) >= 0

    def test_expectation_of_one(self):
        """E_K[1] = 1 and the mean weight estimates Phi"""
        ctx = keyl.keyl_context((2, 1), self.rho)
        est = keyl.keyl_expectation(lambda u: 1.0, ctx, 2000, self.rng)
        assert est.value == pytest.approx(1.0)
        assert abs(est.normalizer - ctx.phi) <= 5 * est.normalizer_se

    def test_too_few_draws(self):
        """Importance sampling needs MIN_DRAWS draws"""
        ctx = keyl.keyl_context((2, 1), self.rho)
        with pytest.raises(ValueError):
            keyl.keyl_expectation(lambda u: 1.0, ctx, 10, self.rng)

    def test_rejection(self):
        """Rejection sampling returns a unitary"""
        ctx = keyl.keyl_context((2, 1), self.rho)
        unitary = keyl.keyl_sample_rejection(ctx, self.rng)
        np.testing.assert_allclose(unitary.conj().T @ unitary, np.eye(3),
                                   atol=1e-9)


class TestEstimators():
    """Test Keyl's tomography and PCA estimates"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.rng = np.random.default_rng(202)
        self.rho = density_from_spectrum((0.7, 0.3),
                                         haar_unitary(2, self.rng))

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.rng, self.rho

    def test_tomography(self):
        """Full estimate is a density matrix with spectrum lam / n"""
        est = keyl.tomography_estimate(10, self.rho, self.rng)
        assert est.shape.size() == 10
        assert np.trace(est.rho_hat).real == pytest.approx(1.0)
        values = np.sort(np.linalg.eigvalsh(est.rho_hat))[::-1]
        np.testing.assert_allclose(values,
                                   np.asarray(est.shape.padded(2)) / 10,
                                   atol=1e-12)

    def test_pca_rank(self):
        """The rank-k estimate has rank at most k"""
        est = keyl.pca_estimate(10, self.rho, 1, self.rng)
        assert est.k == 1
        assert np.linalg.matrix_rank(est.rho_hat, tol=1e-9) <= 1

    def test_bad_k(self):
        """k must lie in 1..d"""
        with pytest.raises(ValueError):
            keyl.pca_estimate(10, self.rho, 3, self.rng)

    def test_frobenius_bound(self):
        """E||rho_hat - rho||_F^2 <= (4d - 3)/n"""
        report = keyl.verify_frobenius_bound(8, self.rho, 200, self.rng,
                                             inner=1000)
        assert report.n_reps == 200
        assert report.passed

    def test_pca_and_trace_bounds(self):
        """Trace norm bounds for the PCA and full estimates"""
        assert keyl.verify_pca_bound(8, self.rho, 1, 200, self.rng,
                                     inner=1000).passed
        assert keyl.verify_trace_bound(8, self.rho, 200, self.rng,
                                       inner=1000).passed

    def test_inner_streams(self, monkeypatch):
        """Inner draws use their own base seed, not the outer one"""
        outer_seeds, inner_seeds = [], []

        def outer(func, reps, seed, workers=1):
            outer_seeds.append(seed)
            return run_replicas(func, reps, seed, workers=workers)

        def inner(seed, index):
            inner_seeds.append(seed)
            return replica_rng(seed, index)

        monkeypatch.setattr(keyl, 'run_replicas', outer)
        monkeypatch.setattr(keyl, 'replica_rng', inner)
        keyl.verify_frobenius_bound(8, self.rho, 200,
                                    np.random.default_rng(5), inner=1000)
        expected = np.random.default_rng(5)
        outer_seed = int(expected.integers(2 ** 31))
        inner_seed = int(expected.integers(2 ** 31))
        assert outer_seeds == [outer_seed]
        assert len(inner_seeds) > 0
        assert set(inner_seeds) == {inner_seed}
        assert inner_seed not in (outer_seed, outer_seed + 1)

    def test_too_few_outer_reps(self):
        """Outer replicas are at least MIN_OUTER_REPS"""
        with pytest.raises(ValueError):
            keyl.verify_frobenius_bound(8, self.rho, 10, self.rng)


class TestIdentities():
    """Test the Keyl moment identities"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.rng = np.random.default_rng(303)
        self.rho = density_from_spectrum((0.5, 0.3, 0.2),
                                         haar_unitary(3, self.rng))

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.rng, self.rho

    def test_diagonal_weights(self):
        """Weights are nonnegative and sum to one"""
        for lam in ((3, 1), (4, 2, 1), (2, 2), (5,)):
            for m in (1, 2, 3):
                weights = keyl.diagonal_weights(lam, m)
                assert len(weights) == m
                assert sum(weights) == 1
                assert all(w >= 0 for w in weights)

    def test_first_weights(self):
        """m = 1 puts all weight on the first row"""
        assert keyl.diagonal_weights((3, 1), 1) == [Fraction(1)]

    def test_calibration(self):
        """Mean Haar weight matches Phi"""
        assert_identity(keyl.verify_calibration((2, 1), self.rho, 5000,
                                                self.rng))

    def test_first_diagonal(self):
        """E_K (U^dag rho U)_11 matches the Phi ratio"""
        assert_identity(keyl.verify_first_diagonal((2, 1), self.rho, 5000,
                                                   self.rng))

    def test_power_expectation(self):
        """E_K Delta_mu matches the Phi ratio"""
        assert_identity(keyl.verify_power_expectation((2, 1), (1, 1),
                                                      self.rho, 5000,
                                                      self.rng))

    def test_diagonal_moments(self):
        """Three reports per diagonal entry"""
        reports = keyl.verify_diagonal_moments((3, 1), self.rho, 5000,
                                               self.rng)
        assert len(reports) == 9
        for report in reports:
            if report.relation == '==':
                assert_identity(report)

    def test_partial_spectrum(self):
        """Keyl and weighted Haar averages agree"""
        for m in (1, 2, 3):
            assert_identity(keyl.verify_partial_spectrum_identity(
                (2, 1), self.rho, m, 5000, self.rng))

    def test_partial_spectrum_bad_m(self):
        """m must lie in 1..d"""
        with pytest.raises(ValueError):
            keyl.verify_partial_spectrum_identity((2, 1), self.rho, 4, 5000,
                                                  self.rng)
