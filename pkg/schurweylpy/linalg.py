#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Small dense complex linear algebra

Matrices are numpy arrays.  Functions that take a single matrix also accept
a stack of shape (..., d, d) where noted.

Functions
-------------------------------------------------------------------------------
hermitian_eig(mat)
    Eigenvalues sorted descending and matching eigenvectors
haar_unitary(d, rng), haar_unitaries(d, size, rng)
    Haar-random unitaries (single / batched)
density_from_spectrum(alpha, unitary)
    U diag(alpha) U^dagger
principal_minor(mat, k), power_function(lam, mat)
    Leading principal minors and the generalized power function
trace_distance(a, b), trace_norm(a, b), frobenius_distance(a, b)
    Matrix distances
-------------------------------------------------------------------------------
"""
import json
import logging

import numpy as np
import scipy.linalg

from schurweylpy.partitions import _as_partition
from schurweylpy.utils import NumericalError

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-9
MINOR_CLAMP = 1e-10


def _check_square(mat):
    mat = np.asarray(mat)
    if mat.ndim < 2 or mat.shape[-1] != mat.shape[-2]:
        raise ValueError('Expected square matrices, got shape {}'.format(
            mat.shape))
    return mat


def is_hermitian(mat, tol=HERMITIAN_TOL):
    mat = _check_square(mat)
    return bool(np.max(np.abs(mat - np.swapaxes(mat.conj(), -1, -2)),
                       initial=0.0) < tol)


def hermitian_eig(mat):
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending

    Parameters
    ----------
    mat : (array-like)
        Hermitian d x d matrix

    Returns
    -------
    values : (numpy.ndarray)
        real eigenvalues, weakly decreasing
    vectors : (numpy.ndarray)
        unitary whose columns are the matching eigenvectors, so that
        mat = vectors @ diag(values) @ vectors^dagger

    Raises
    ------
    ValueError
        if mat is not Hermitian
    """
    mat = _check_square(mat)
    scale = max(1.0, float(np.max(np.abs(mat), initial=0.0)))
    if not is_hermitian(mat, HERMITIAN_TOL * scale):
        raise ValueError('Matrix is not Hermitian.')
    values, vectors = scipy.linalg.eigh(mat)
    return values[::-1], vectors[:, ::-1]


def _fix_phases(q_mat, r_mat):
    diag = np.diagonal(r_mat, axis1=-2, axis2=-1)
    phases = diag / np.where(np.abs(diag) > 0, np.abs(diag), 1.0)
    return q_mat * phases[..., None, :]


def haar_unitary(d, rng):
    """Haar-distributed d x d unitary

    QR of a complex Ginibre matrix, with each column rescaled by the phase of
    the matching diagonal entry of R.
    """
    if d < 1:
        raise ValueError('d must be a positive integer')
    ginibre = (rng.standard_normal((d, d))
               + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q_mat, r_mat = scipy.linalg.qr(ginibre)
    return _fix_phases(q_mat, r_mat)


def haar_unitaries(d, size, rng):
    """Stack of size independent Haar unitaries, shape (size, d, d)"""
    if d < 1:
        raise ValueError('d must be a positive integer')
    ginibre = (rng.standard_normal((size, d, d))
               + 1j * rng.standard_normal((size, d, d))) / np.sqrt(2.0)
    q_mat, r_mat = np.linalg.qr(ginibre)
    return _fix_phases(q_mat, r_mat)


def is_unitary(mat, tol=1e-9):
    mat = _check_square(mat)
    eye = np.eye(mat.shape[-1])
    return bool(np.max(np.abs(mat.conj().T @ mat - eye)) < tol)


def density_from_spectrum(alpha, unitary=None):
    """Density matrix U diag(alpha) U^dagger (identity basis when U is None)"""
    alpha = np.asarray([float(a) for a in alpha])
    if unitary is None:
        return np.diag(alpha).astype(complex)
    unitary = _check_square(unitary)
    if unitary.shape[-1] != len(alpha):
        raise ValueError('Dimension mismatch: {} vs {}'.format(
            unitary.shape[-1], len(alpha)))
    return (unitary * alpha[None, :]) @ unitary.conj().T


def check_density(rho):
    """Validate a density matrix: Hermitian, PSD, unit trace"""
    rho = _check_square(rho)
    if not is_hermitian(rho):
        raise ValueError('Density matrix is not Hermitian.')
    if abs(np.trace(rho) - 1.0) > 1e-10:
        raise ValueError('Density matrix trace must be 1.')
    if np.linalg.eigvalsh(rho).min() < -PSD_TOL:
        raise ValueError('Density matrix is not positive semidefinite.')
    return rho


def spectrum(rho, zero_tol=1e-12):
    """Sorted spectrum of a density matrix, entries below zero_tol set to 0"""
    values = hermitian_eig(rho)[0]
    values[np.abs(values) < zero_tol] = 0.0
    return values


def conjugate_by(rho, unitaries):
    """U^dagger rho U for a single unitary or a stack"""
    unitaries = np.asarray(unitaries)
    return np.swapaxes(unitaries.conj(), -1, -2) @ rho @ unitaries


def principal_minor(mat, k):
    """Determinant of the top-left k x k block (works on stacks)"""
    mat = _check_square(mat)
    if not 1 <= k <= mat.shape[-1]:
        raise ValueError('k must lie in 1..{}'.format(mat.shape[-1]))
    return np.linalg.det(mat[..., :k, :k])


def power_function(lam, mat):
    """Generalized power function prod_k pm_k(mat)^(lam_k - lam_{k+1})

    Parameters
    ----------
    lam : (Partition)
        at most d rows
    mat : (array-like)
        PSD matrix or stack of PSD matrices

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    NumericalError
        if a needed minor is below -1e-10 (non-PSD input); minors in
        [-1e-10, 0) are clamped to zero
    """
    lam = _as_partition(lam)
    mat = _check_square(mat)
    d = mat.shape[-1]
    if len(lam) > d:
        raise ValueError('{} has more than {} rows'.format(tuple(lam), d))
    result = np.ones(mat.shape[:-2])
    for k in range(1, len(lam) + 1):
        exponent = lam.part(k - 1) - lam.part(k)
        if exponent == 0:
            continue
        minor = np.real(principal_minor(mat, k))
        if np.any(minor < -MINOR_CLAMP):
            raise NumericalError('Negative principal minor {:.3g}; input is '
                                 'not PSD'.format(float(np.min(minor))))
        if np.any(minor < 0):
            logger.warning('clamping tiny negative principal minors')
        result = result * np.clip(minor, 0.0, None) ** exponent
    return result if result.ndim else float(result)


def top_block_spectrum(mat, m):
    """Eigenvalues of the top-left m x m block, descending (works on stacks)"""
    mat = _check_square(mat)
    return np.linalg.eigvalsh(mat[..., :m, :m])[..., ::-1]


def trace_distance(a_mat, b_mat):
    """Half the sum of absolute eigenvalues of a - b"""
    a_mat = _check_square(a_mat)
    b_mat = _check_square(b_mat)
    if a_mat.shape != b_mat.shape:
        raise ValueError('Dimension mismatch: {} vs {}'.format(a_mat.shape,
                                                               b_mat.shape))
    return 0.5 * np.sum(np.abs(np.linalg.eigvalsh(a_mat - b_mat)), axis=-1)


def frobenius_distance(a_mat, b_mat):
    """Entrywise l2 norm of a - b"""
    a_mat = _check_square(a_mat)
    b_mat = _check_square(b_mat)
    if a_mat.shape != b_mat.shape:
        raise ValueError('Dimension mismatch: {} vs {}'.format(a_mat.shape,
                                                               b_mat.shape))
    return np.sqrt(np.sum(np.abs(a_mat - b_mat) ** 2, axis=(-2, -1)))


def matrix_to_json(mat):
    """Serialize a complex matrix as nested [re, im] pairs"""
    mat = np.asarray(mat, dtype=complex)
    return json.dumps([[[v.real, v.imag] for v in row] for row in mat])


def matrix_from_json(text):
    return np.asarray([[complex(re, im) for re, im in row]
                       for row in json.loads(text)])


def trace_norm(a_mat, b_mat):
    """Sum of absolute eigenvalues of a - b (twice the trace distance)"""
    return 2.0 * trace_distance(a_mat, b_mat)
