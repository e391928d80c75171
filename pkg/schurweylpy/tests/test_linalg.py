# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
""" Tests the dense linear algebra helpers
"""

import logging
import numpy as np
import pytest
from schurweylpy import linalg
from schurweylpy.utils import NumericalError


class TestEigen():
    """Test the Hermitian eigendecomposition"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.rng = np.random.default_rng(42)

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.rng

    def test_reconstruction(self):
        """Eigenvalues are descending and reconstruct the matrix"""
        rho = linalg.density_from_spectrum((0.5, 0.3, 0.2),
                                           linalg.haar_unitary(3, self.rng))
        values, vectors = linalg.hermitian_eig(rho)
        np.testing.assert_allclose(values, [0.5, 0.3, 0.2], atol=1e-12)
        np.testing.assert_allclose(
            vectors @ np.diag(values) @ vectors.conj().T, rho, atol=1e-12)

    def test_not_hermitian(self):
        """Non-Hermitian input is rejected"""
        with pytest.raises(ValueError):
            linalg.hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_not_square(self):
        """Matrices must be square"""
        with pytest.raises(ValueError):
            linalg.hermitian_eig(np.zeros((2, 3)))

    def test_spectrum_zeroes_dust(self):
        """Eigenvalues below the threshold are reported as exact zeros"""
        rho = linalg.density_from_spectrum((1.0, 0.0))
        assert list(linalg.spectrum(rho)) == [1.0, 0.0]


class TestHaar():
    """Test the Haar unitary samplers"""

    def setup_method(self):
        """Runs before every method to create a clean testing setup"""
        self.rng = np.random.default_rng(42)

    def teardown_method(self):
        """Runs after every method to clean up previous testing"""
        del self.rng

    def test_unitary(self):
        """Samples are unitary"""
        assert linalg.is_unitary(linalg.haar_unitary(4, self.rng))
        stack = linalg.haar_unitaries(3, 10, self.rng)
        assert stack.shape == (10, 3, 3)
        for unitary in stack:
            assert linalg.is_unitary(unitary)

    def test_first_moment(self):
        """E |U_11|^2 = 1/d"""
        stack = linalg.haar_unitaries(3, 4000, self.rng)
        assert np.mean(np.abs(stack[:, 0, 0]) ** 2) == pytest.approx(
            1 / 3, abs=0.02)

    def test_bad_dimension(self):
        """d must be positive"""
        with pytest.raises(ValueError):
            linalg.haar_unitary(0, self.rng)


class TestDensity():
    """Test density matrix construction and validation"""

    def test_diagonal(self):
        """Identity eigenbasis gives a diagonal matrix"""
        rho = linalg.density_from_spectrum((0.7, 0.3))
        np.testing.assert_allclose(rho, np.diag([0.7, 0.3]))
        assert linalg.check_density(rho) is rho

    def test_bad_trace(self):
        """Unit trace is required"""
        with pytest.raises(ValueError):
            linalg.check_density(np.diag([0.7, 0.7]))

    def test_not_psd(self):
        """Negative eigenvalues are rejected"""
        with pytest.raises(ValueError):
            linalg.check_density(np.diag([1.5, -0.5]))

    def test_dimension_mismatch(self):
        """Spectrum and unitary must agree in dimension"""
        with pytest.raises(ValueError):
            linalg.density_from_spectrum((0.5, 0.5), np.eye(3))


class TestPowerFunction():
    """Test principal minors and the generalized power function"""

    def test_diagonal(self):
        """On a diagonal matrix Delta_lam is prod x_i^lam_i"""
        mat = np.diag([0.5, 0.3, 0.2])
        value = linalg.power_function((3, 1), mat)
        assert value == pytest.approx(0.5 ** 3 * 0.3)

    def test_minors(self):
        """Leading minors of a diagonal matrix"""
        mat = np.diag([2.0, 3.0, 4.0])
        assert linalg.principal_minor(mat, 2) == pytest.approx(6.0)
        with pytest.raises(ValueError):
            linalg.principal_minor(mat, 4)

    def test_stack(self):
        """Stacks of matrices give one value each"""
        mats = np.stack([np.diag([0.5, 0.5]), np.diag([0.9, 0.1])])
        values = linalg.power_function((2,), mats)
        np.testing.assert_allclose(values, [0.25, 0.81])

    def test_not_psd(self):
        """A clearly negative minor is a numerical error"""
        with pytest.raises(NumericalError):
            linalg.power_function((1, 1), np.diag([1.0, -0.5]))

    def test_clamped(self, caplog):
        """Tiny negative minors are clamped with a warning"""
        with caplog.at_level(logging.WARNING, logger='schurweylpy.linalg'):
            value = linalg.power_function((1, 1), np.diag([1.0, -1e-12]))
        assert value == 0.0
        assert 'clamping' in caplog.text

    def test_too_many_rows(self):
        """Shapes longer than d are rejected"""
        with pytest.raises(ValueError):
            linalg.power_function((1, 1, 1), np.eye(2))


class TestDistances():
    """Test matrix distances and serialization"""

    def test_trace_distance(self):
        """Orthogonal pure states are at distance one"""
        a_mat = np.diag([1.0, 0.0])
        b_mat = np.diag([0.0, 1.0])
        assert linalg.trace_distance(a_mat, b_mat) == pytest.approx(1.0)
        assert linalg.trace_norm(a_mat, b_mat) == pytest.approx(2.0)

    def test_frobenius(self):
        """Frobenius distance of diagonal matrices"""
        assert linalg.frobenius_distance(np.diag([1.0, 0.0]),
                                         np.diag([0.0, 1.0])) == \
            pytest.approx(np.sqrt(2.0))

    def test_mismatch(self):
        """Distances need equal dimensions"""
        with pytest.raises(ValueError):
            linalg.trace_distance(np.eye(2), np.eye(3))

    def test_top_block(self):
        """Top block eigenvalues, descending"""
        mat = np.diag([0.2, 0.5, 0.3])
        np.testing.assert_allclose(linalg.top_block_spectrum(mat, 2),
                                   [0.5, 0.2])

    def test_json(self):
        """Complex matrices serialize as [re, im] pairs"""
        mat = np.array([[1.0, 0.5j], [-0.5j, 0.0]])
        text = linalg.matrix_to_json(mat)
        assert text.startswith('[[[1.0, 0.0], [0.0, 0.5]]')
        np.testing.assert_allclose(linalg.matrix_from_json(text), mat)
