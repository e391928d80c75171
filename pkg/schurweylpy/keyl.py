#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""The Keyl distribution, tomography and PCA estimators

K_lam(rho) is the law on unitaries with density
Delta_lam(U^dagger rho U) / Phi_lam(alpha) against Haar measure, where alpha
is the spectrum of rho.  Expectations under it are estimated by
self-normalized importance sampling with Haar proposals; exact samples come
from rejection sampling with envelope prod_i alpha_i^lam_i.

Classes
-------------------------------------------------------------------------------
KeylContext
    Shape, state, spectrum and normalizer Phi_lam(alpha)
KeylEstimate
    Importance-sampling estimate with standard errors
TomographyEstimate
    U diag^(k)(lam / n) U^dagger together with lam, U and k

Functions
-------------------------------------------------------------------------------
keyl_context(lam, rho)
keyl_density(unitary, ctx)
keyl_expectation(func, ctx, n_draws, rng, batched=False)
keyl_sample_rejection(ctx, rng, max_tries=100000)
tomography_estimate(n, rho, rng), pca_estimate(n, rho, k, rng)
verify_frobenius_bound, verify_pca_bound, verify_trace_bound
verify_calibration, verify_first_diagonal, verify_power_expectation
diagonal_weights(lam, m), verify_diagonal_moments(lam, rho, n_draws, rng)
verify_partial_spectrum_identity(lam, rho, m, n_draws, rng)
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
import logging
import math

import numpy as np

from schurweylpy.linalg import (check_density, conjugate_by, haar_unitaries,
                                power_function, spectrum, top_block_spectrum)
from schurweylpy.partitions import (Partition, _as_partition,
                                    lower_partition, upper_partition)
from schurweylpy.reports import BoundReport, EQUAL, LOWER
from schurweylpy.schur import dim_weyl, normalized_schur, schur_values
from schurweylpy.schur_weyl import sw_sample
from schurweylpy.utils import NumericalError, replica_rng, run_replicas

logger = logging.getLogger(__name__)

MIN_DRAWS = 1000
MIN_OUTER_REPS = 200
LOW_ACCEPTANCE = 1e-3
BATCH = 256
MOMENT_REF = 'Keyl moment identity'
DIAGONAL_REF = 'Keyl diagonal moments'


@dataclass(frozen=True)
class KeylContext:
    """Everything the Keyl density needs for a fixed (lam, rho)"""
    lam: Partition
    rho: np.ndarray
    alpha: tuple
    phi: float

    @property
    def d(self):
        return len(self.alpha)

    def envelope(self):
        """prod_i alpha_i^lam_i, an upper bound on Delta_lam(U^dag rho U)"""
        return math.prod(a ** p for a, p in zip(self.alpha, self.lam))


@dataclass(frozen=True)
class KeylEstimate:
    """Self-normalized importance-sampling estimate

    ``normalizer`` is the mean importance weight, an estimate of
    Phi_lam(alpha).
    """
    value: object
    std_error: object
    normalizer: float
    normalizer_se: float
    n_draws: int


@dataclass(frozen=True)
class TomographyEstimate:
    rho_hat: np.ndarray
    shape: Partition
    unitary: np.ndarray
    k: int


def keyl_context(lam, rho):
    """Build a KeylContext, checking that lam fits the rank of rho

    Raises
    ------
    ValueError
        if rho is not a density matrix, lam has more than d rows, or
        Phi_lam(alpha) vanishes (lam longer than the rank of rho)
    """
    lam = _as_partition(lam)
    rho = check_density(np.asarray(rho, dtype=complex))
    alpha = tuple(float(a) for a in spectrum(rho))
    if len(lam) > len(alpha):
        raise ValueError('{} has more than {} rows'.format(tuple(lam),
                                                           len(alpha)))
    phi = float(normalized_schur(lam, alpha))
    if phi <= 0:
        raise ValueError(''.join(('Phi_lam(alpha) vanishes: ',
                                  str(tuple(lam)), ' is longer than the ',
                                  'rank of rho')))
    return KeylContext(lam, rho, alpha, phi)


def keyl_density(unitary, ctx):
    """Density of K_lam(rho) against Haar measure (single U or a stack)"""
    return power_function(ctx.lam, conjugate_by(ctx.rho, unitary)) / ctx.phi


def _weighted_mean(values, weights):
    """Self-normalized mean and delta-method standard error"""
    total = math.fsum(weights)
    if total <= 0:
        raise NumericalError('All importance weights are zero.')
    values = np.asarray(values, dtype=float)
    flat = values.reshape(len(weights), -1)
    mean = np.asarray([math.fsum(weights * flat[:, c]) / total
                       for c in range(flat.shape[1])])
    resid = (flat - mean) * weights[:, None]
    se = np.sqrt(np.sum(resid ** 2, axis=0)) / total
    shape = values.shape[1:]
    if not shape:
        return float(mean[0]), float(se[0])
    return mean.reshape(shape), se.reshape(shape)


def keyl_expectation(func, ctx, n_draws, rng, batched=False):
    """E_{U ~ K_lam(rho)} func(U) by self-normalized importance sampling

    Parameters
    ----------
    func : (callable)
        func(U) -> float for one unitary, or, with batched=True, a map from
        a stack (N, d, d) to an array whose first axis has length N
    ctx : (KeylContext)
    n_draws : (int)
        Haar draws, at least 1000
    rng : (numpy.random.Generator)
    batched : (bool)
        whether func works on stacks (default=False)

    Returns
    -------
    KeylEstimate

    Raises
    ------
    NumericalError
        if every importance weight is zero
    """
    if n_draws < MIN_DRAWS:
        raise ValueError('n_draws must be at least {}'.format(MIN_DRAWS))
    unitaries = haar_unitaries(ctx.d, n_draws, rng)
    weights = np.asarray(power_function(ctx.lam,
                                        conjugate_by(ctx.rho, unitaries)))
    if batched:
        values = np.asarray(func(unitaries))
    else:
        values = np.asarray([func(u) for u in unitaries])
    value, std_error = _weighted_mean(values, weights)
    return KeylEstimate(value, std_error, math.fsum(weights) / n_draws,
                        float(weights.std(ddof=1) / math.sqrt(n_draws)),
                        n_draws)


def keyl_sample_rejection(ctx, rng, max_tries=100000):
    """Exact draw from K_lam(rho) by rejection from Haar proposals

    A Haar unitary U is accepted with probability
    Delta_lam(U^dagger rho U) / prod_i alpha_i^lam_i; the expected acceptance
    rate is Phi_lam(alpha) / prod_i alpha_i^lam_i.

    Raises
    ------
    NumericalError
        if max_tries proposals are rejected
    """
    envelope = ctx.envelope()
    if envelope <= 0:
        raise ValueError('Envelope prod alpha_i^lam_i vanishes.')
    expected = min(1.0, ctx.phi / envelope)
    if expected < LOW_ACCEPTANCE:
        logger.warning('Keyl rejection sampler: expected acceptance rate '
                       '%.3g for lam=%s', expected, tuple(ctx.lam))
    tries = 0
    while tries < max_tries:
        size = min(BATCH, max_tries - tries)
        unitaries = haar_unitaries(ctx.d, size, rng)
        weights = np.asarray(power_function(
            ctx.lam, conjugate_by(ctx.rho, unitaries)))
        accept = rng.random(size) * envelope <= weights
        if accept.any():
            return unitaries[int(np.argmax(accept))]
        tries += size
    raise NumericalError(''.join((
        'Keyl rejection sampler exhausted {} tries; '.format(max_tries),
        'observed acceptance rate 0, expected {:.3g}'.format(expected))))


def _truncated(lam, n, d, k):
    values = np.asarray(lam.padded(d), dtype=float) / n
    values[k:] = 0.0
    return values


def tomography_estimate(n, rho, rng, k=None, max_tries=100000):
    """Keyl's estimate U diag(lam / n) U^dagger (top k entries kept if given)

    lam ~ SW^n(spectrum of rho) and U ~ K_lam(rho) by rejection sampling.
    """
    rho = check_density(np.asarray(rho, dtype=complex))
    d = rho.shape[-1]
    k = d if k is None else k
    if not 1 <= k <= d:
        raise ValueError('k must lie in 1..{}'.format(d))
    lam = sw_sample(n, tuple(spectrum(rho)), rng)
    ctx = keyl_context(lam, rho)
    unitary = keyl_sample_rejection(ctx, rng, max_tries)
    values = _truncated(lam, n, d, k)
    rho_hat = (unitary * values[None, :]) @ unitary.conj().T
    return TomographyEstimate(rho_hat, lam, unitary, k)


def pca_estimate(n, rho, k, rng, max_tries=100000):
    """Rank-k estimate U diag^(k)(lam / n) U^dagger"""
    return tomography_estimate(n, rho, rng, k=k, max_tries=max_tries)


def _shape_rows(count, rng, n, alpha):
    return [sw_sample(n, alpha, rng).padded(len(alpha)) for _ in range(count)]


def _outer_shapes(n, alpha, reps, seed, workers):
    rows = run_replicas(partial(_shape_rows, n=n, alpha=alpha), reps, seed,
                        workers=workers)
    return np.unique(rows.reshape(reps, len(alpha)), axis=0,
                     return_inverse=True)


def _inner_by_shape(n, rho, reps, rng, inner, workers, func):
    """Per-replica inner Keyl expectations of func(lam, stack)

    Outer shapes come from replica streams; the inner importance-sampling
    estimate is computed once per distinct shape, on streams drawn from a
    second base seed.
    """
    alpha = tuple(float(a) for a in spectrum(rho))
    seed = int(rng.integers(2 ** 31))
    inner_seed = int(rng.integers(2 ** 31))
    shapes, inverse = _outer_shapes(n, alpha, reps, seed, workers)
    per_shape = []
    for index, parts in enumerate(shapes):
        lam = Partition(parts)
        ctx = keyl_context(lam, rho)
        est = keyl_expectation(partial(func, lam), ctx, inner,
                               replica_rng(inner_seed, index), batched=True)
        per_shape.append(est.value)
    return np.asarray(per_shape)[np.ravel(inverse)], shapes[np.ravel(inverse)]


def verify_frobenius_bound(n, rho, reps, rng, inner=10000, workers=1):
    """E ||rho_hat - rho||_F^2 <= (4d - 3)/n

    For each outer shape lam the inner expectation over U uses
    ||diag(lam/n) - U^dag rho U||_F^2 = sum lam_i^2/n^2 + tr rho^2
    - 2 sum_i (lam_i/n) E (U^dag rho U)_ii.
    """
    rho = check_density(np.asarray(rho, dtype=complex))
    d = rho.shape[-1]
    if reps < MIN_OUTER_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_OUTER_REPS))

    def diagonal(lam, unitaries):
        return np.real(np.diagonal(conjugate_by(rho, unitaries),
                                   axis1=-2, axis2=-1))

    diag_means, shapes = _inner_by_shape(n, rho, reps, rng, inner, workers,
                                         diagonal)
    bars = shapes / n
    purity = float(np.real(np.trace(rho @ rho)))
    values = (np.sum(bars ** 2, axis=1) + purity
              - 2 * np.sum(bars * diag_means, axis=1))
    return BoundReport.from_values(
        'tomography', {'n': n, 'd': d, 'alpha': list(spectrum(rho)),
                       'inner': inner},
        values, (4 * d - 3) / n, 'E||rho_hat - rho||_F^2 <= (4d - 3)/n',
        ref='Keyl Frobenius bound')


def _trace_norm_values(n, k, rho, lam, unitaries):
    d = rho.shape[-1]
    diff = np.diag(_truncated(lam, n, d, k))[None] - conjugate_by(rho,
                                                                  unitaries)
    return np.sum(np.abs(np.linalg.eigvalsh(diff)), axis=-1)


def verify_pca_bound(n, rho, k, reps, rng, inner=10000, workers=1):
    """E ||rho_hat_k - rho||_1 <= alpha_{k+1} + ... + alpha_d + 6 sqrt(kd/n)"""
    rho = check_density(np.asarray(rho, dtype=complex))
    d = rho.shape[-1]
    if not 1 <= k <= d:
        raise ValueError('k must lie in 1..{}'.format(d))
    if reps < MIN_OUTER_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_OUTER_REPS))
    alpha = spectrum(rho)
    values, _ = _inner_by_shape(n, rho, reps, rng, inner, workers,
                                partial(_trace_norm_values, n, k, rho))
    bound = float(np.sum(alpha[k:])) + 6 * math.sqrt(k * d / n)
    return BoundReport.from_values(
        'pca', {'n': n, 'd': d, 'k': k, 'alpha': list(alpha),
                'inner': inner},
        values, bound,
        'E||rho_hat_k - rho||_1 <= alpha_{k+1} + ... + alpha_d + 6sqrt(kd/n)',
        ref='Keyl PCA bound')


def verify_trace_bound(n, rho, reps, rng, inner=10000, workers=1):
    """E ||rho_hat - rho||_1 <= sqrt(2 r (4d - 3)/n), r = rank(rho)"""
    rho = check_density(np.asarray(rho, dtype=complex))
    d = rho.shape[-1]
    if reps < MIN_OUTER_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_OUTER_REPS))
    alpha = spectrum(rho)
    rank = int(np.sum(alpha > 0))
    values, _ = _inner_by_shape(n, rho, reps, rng, inner, workers,
                                partial(_trace_norm_values, n, d, rho))
    return BoundReport.from_values(
        'tomography_trace', {'n': n, 'd': d, 'alpha': list(alpha),
                             'inner': inner},
        values, math.sqrt(2 * rank * (4 * d - 3) / n),
        'E||rho_hat - rho||_1 <= sqrt(2r(4d - 3)/n)',
        ref='Keyl trace-norm bound')


def _identity_report(experiment, params, est, target, name):
    return BoundReport(experiment, params, float(est.value),
                       float(est.std_error), float(target), est.n_draws,
                       name, EQUAL, bound_ref=MOMENT_REF)


def verify_calibration(lam, rho, n_draws, rng):
    """Mean Haar weight E Delta_lam(U^dag rho U) equals Phi_lam(alpha)"""
    ctx = keyl_context(lam, rho)
    unitaries = haar_unitaries(ctx.d, n_draws, rng)
    weights = power_function(ctx.lam, conjugate_by(ctx.rho, unitaries))
    return BoundReport.from_values(
        'calibration', {'lam': list(ctx.lam), 'alpha': list(ctx.alpha)},
        weights, ctx.phi, 'E_Haar Delta_lam(U^dag rho U) == Phi_lam(alpha)',
        relation=EQUAL, ref='Keyl calibration identity')


def _phi_ratio(ctx, mu):
    return float(normalized_schur(ctx.lam + _as_partition(mu), ctx.alpha)
                 / normalized_schur(ctx.lam, ctx.alpha))


def verify_first_diagonal(lam, rho, n_draws, rng):
    """E_K (U^dag rho U)_11 equals Phi_{lam+e_1}(alpha) / Phi_lam(alpha)"""
    ctx = keyl_context(lam, rho)
    est = keyl_expectation(
        lambda us: np.real(conjugate_by(ctx.rho, us)[:, 0, 0]), ctx, n_draws,
        rng, batched=True)
    return _identity_report(
        'keyl_first_diagonal', {'lam': list(ctx.lam),
                                'alpha': list(ctx.alpha)},
        est, _phi_ratio(ctx, (1,)),
        'E_K (U^dag rho U)_11 == Phi_{lam+e1}(alpha)/Phi_lam(alpha)')


def verify_power_expectation(lam, mu, rho, n_draws, rng):
    """E_K Delta_mu(U^dag rho U) equals Phi_{lam+mu}(alpha) / Phi_lam(alpha)"""
    ctx = keyl_context(lam, rho)
    mu = _as_partition(mu)
    est = keyl_expectation(
        lambda us: power_function(mu, conjugate_by(ctx.rho, us)), ctx,
        n_draws, rng, batched=True)
    return _identity_report(
        'keyl_power', {'lam': list(ctx.lam), 'mu': list(mu),
                       'alpha': list(ctx.alpha)},
        est, _phi_ratio(ctx, mu),
        'E_K Delta_mu(U^dag rho U) == Phi_{lam+mu}(alpha)/Phi_lam(alpha)')


def _average_weights(lam, m):
    """p_i = dim(u_m + e_i, m) / (m dim(u_m, m)) for i = 1..m, exact"""
    upper = upper_partition(lam, m)
    base = dim_weyl(upper, m)
    return [Fraction(dim_weyl(upper.add_box(i), m), m * base)
            if upper.can_add_box(i) else Fraction(0) for i in range(m)]


def diagonal_weights(lam, m):
    """Convex weights r_i with E_K (U^dag rho U)_mm = sum_i r_i R_i

    R_i = Phi_{lam+e_i}(alpha) / Phi_lam(alpha).  The weights are
    r_i = m p_i - (m - 1) q_i, where p and q are the averaging weights for
    the first m and first m - 1 diagonal entries; they are nonnegative and
    sum to 1.
    """
    lam = _as_partition(lam)
    if m < 1:
        raise ValueError('m must be a positive integer')
    p_weights = _average_weights(lam, m)
    if m == 1:
        return p_weights
    q_weights = _average_weights(lam, m - 1) + [Fraction(0)]
    return [m * p - (m - 1) * q for p, q in zip(p_weights, q_weights)]


def _row_ratios(ctx):
    """R_i for i = 1..d, zero where lam + e_i is not a partition"""
    base = normalized_schur(ctx.lam, ctx.alpha)
    return [float(normalized_schur(ctx.lam.add_box(i), ctx.alpha) / base)
            if ctx.lam.can_add_box(i) else 0.0 for i in range(ctx.d)]


def verify_diagonal_moments(lam, rho, n_draws, rng):
    """Importance-sampled diagonal moments against their exact forms

    For each m = 1..d, three reports from one set of Haar draws:
    the average of the first m diagonal entries against sum_i p_i R_i,
    the m-th entry against sum_i r_i R_i, and the one-sided bound
    E_K (U^dag rho U)_mm >= R_m.

    Returns
    -------
    list of BoundReport
    """
    ctx = keyl_context(lam, rho)
    est = keyl_expectation(
        lambda us: np.real(np.diagonal(conjugate_by(ctx.rho, us),
                                       axis1=-2, axis2=-1)),
        ctx, n_draws, rng, batched=True)
    ratios = _row_ratios(ctx)
    params = {'lam': list(ctx.lam), 'alpha': list(ctx.alpha)}
    reports = []
    for m in range(1, ctx.d + 1):
        p_weights = _average_weights(ctx.lam, m)
        r_weights = diagonal_weights(ctx.lam, m)
        diag = est.value[:m]
        # correlated entries; the average's error is bounded by the mean se
        avg_se = float(np.mean(est.std_error[:m]))
        reports.append(BoundReport(
            'diagonal_average', dict(params, m=m), float(np.mean(diag)),
            avg_se, sum(float(p) * r for p, r in zip(p_weights, ratios)),
            n_draws, 'E_K avg_{i<=m} (U^dag rho U)_ii == sum_i p_i R_i',
            EQUAL, bound_ref=DIAGONAL_REF))
        target = sum(float(w) * r for w, r in zip(r_weights, ratios))
        reports.append(BoundReport(
            'diagonal_entry', dict(params, m=m), float(diag[m - 1]),
            float(est.std_error[m - 1]), target, n_draws,
            'E_K (U^dag rho U)_mm == sum_i r_i R_i', EQUAL,
            bound_ref=DIAGONAL_REF))
        reports.append(BoundReport(
            'diagonal_lower', dict(params, m=m), float(diag[m - 1]),
            float(est.std_error[m - 1]), ratios[m - 1], n_draws,
            'E_K (U^dag rho U)_mm >= Phi_{lam+e_m}(alpha)/Phi_lam(alpha)',
            LOWER, bound_ref=DIAGONAL_REF))
    return reports


def verify_partial_spectrum_identity(lam, rho, m, n_draws, rng):
    """Keyl average of f(beta) against the weighted Haar average

    beta is the spectrum of the top-left m x m block of U^dag rho U and f is
    its mean.  The left side is importance-sampled under K_lam(rho); the
    right side is Phi_lam(alpha)^-1 E_Haar[f(beta) Phi_u(beta)
    Delta_l(U^dag rho U)] with u, l the upper and lower partitions of lam.
    Both use the same Haar draws; the report compares their difference to 0.
    """
    ctx = keyl_context(lam, rho)
    if not 1 <= m <= ctx.d:
        raise ValueError('m must lie in 1..{}'.format(ctx.d))
    upper = upper_partition(ctx.lam, m)
    lower = lower_partition(ctx.lam, m)
    unitaries = haar_unitaries(ctx.d, n_draws, rng)
    conj = conjugate_by(ctx.rho, unitaries)
    beta = np.clip(top_block_spectrum(conj, m), 0.0, None)
    f_values = beta.mean(axis=1)
    weights = np.asarray(power_function(ctx.lam, conj))
    left, left_se = _weighted_mean(f_values, weights)
    samples = (f_values * schur_values(upper, beta) / dim_weyl(upper, m)
               * np.asarray(power_function(lower, conj)) / ctx.phi)
    right = float(samples.mean())
    right_se = float(samples.std(ddof=1) / math.sqrt(n_draws))
    return BoundReport(
        'partial_spectrum', {'lam': list(ctx.lam), 'alpha': list(ctx.alpha),
                             'm': m},
        left - right, math.sqrt(left_se ** 2 + right_se ** 2), 0.0, n_draws,
        'E_K f(beta) == E_Haar[f(beta) Phi_u(beta) Delta_l] / Phi_lam(alpha)',
        EQUAL, bound_ref='partial-spectrum identity')
