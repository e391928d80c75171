#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Spectrum estimation from the empirical Young diagram

Classes
-------------------------------------------------------------------------------
SpectrumEstimate
    lam / n together with lam and n

Functions
-------------------------------------------------------------------------------
eyd_estimate(n, alpha, rng)
    Estimate a sorted spectrum by lam / n with lam ~ SW^n(alpha)
truncated_estimate(est, k)
    Largest k entries of an estimate
l2_sq(x, y), tv(x, y), dtvk(k, x, y)
    Error metrics
amplify(estimates, eps)
    Estimate with the most other estimates within 2 eps
eyd_copies(eps, r), amplified_eyd(n, alpha, eps, repetitions, rng)
    Sample size for constant success probability, and its amplification
verify_eyd_bound, verify_eyd_exact, verify_eyd_tail
    E||lam/n - alpha||^2 <= d/n (Monte Carlo / exact) and its tail
verify_second_moment, verify_expectation_majorization
    Exact moment and majorization checks
verify_topk_bound, verify_topk_sum_bound, verify_uniform_row1
    Truncated-spectrum bounds
reduction_spectrum, verify_reduction_dominance
    Flattened spectrum majorizing alpha and the induced comparison
row1_increments, verify_row1_increments, verify_increment_recurrence
    First-row growth increments of the uniform growth process
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
import logging
import math

import numpy as np

from schurweylpy.partitions import (Partition, check_prob_vec, majorizes,
                                    MAJ_TOL)
from schurweylpy.reports import BoundReport, LOWER, UPPER
from schurweylpy.schur_weyl import (growth_sample, pmf_expectation, sw_pmf,
                                    sw_sample, transition_probs)
from schurweylpy.utils import run_replicas

logger = logging.getLogger(__name__)

MIN_REPS = 1000
ROW_SUM_REF = 'top-k row-sum bounds'
UNIFORM_ROW1_REF = 'uniform first-row bound'
ROW_SUM_REF = 'top-k row-sum bounds'
UNIFORM_ROW1_REF = 'uniform first-row bound'


@dataclass(frozen=True)
class SpectrumEstimate:
    """Empirical Young diagram estimate lam / n

    Parameters
    ----------
    values : (tuple of float)
        lam_i / n for i = 1..d
    n : (int)
        number of copies
    shape : (Partition)
        the observed shape lam
    """
    values: tuple
    n: int
    shape: Partition


def _pad(x, y):
    x = list(x)
    y = list(y)
    size = max(len(x), len(y))
    return x + [0] * (size - len(x)), y + [0] * (size - len(y))


def l2_sq(x, y):
    """Squared Euclidean distance ||x - y||^2 (shorter input zero-padded)"""
    x, y = _pad(x, y)
    return sum((a - b) ** 2 for a, b in zip(x, y))


def tv(x, y):
    """Total variation distance, half the l1 distance"""
    x, y = _pad(x, y)
    return sum(abs(a - b) for a, b in zip(x, y)) / 2


def dtvk(k, x, y):
    """Truncated distance, half the l1 distance over the first k entries"""
    x, y = _pad(x, y)
    return sum(abs(a - b) for a, b in zip(x[:k], y[:k])) / 2


def _estimate_values(lam, n, d):
    return tuple(part / n for part in lam.padded(d))


def eyd_estimate(n, alpha, rng):
    """Empirical Young diagram estimate of a sorted spectrum

    Parameters
    ----------
    n : (int)
        number of copies, n >= 1
    alpha : (sequence of float)
        true spectrum, used to simulate lam ~ SW^n(alpha)
    rng : (numpy.random.Generator)

    Returns
    -------
    SpectrumEstimate
    """
    if n < 1:
        raise ValueError('n must be a positive integer')
    alpha = check_prob_vec(alpha)
    lam = sw_sample(n, alpha, rng)
    return SpectrumEstimate(_estimate_values(lam, n, len(alpha)), n, lam)


def truncated_estimate(est, k):
    """First k entries of an estimate, 1 <= k <= d"""
    if not 1 <= k <= len(est.values):
        raise ValueError('k must lie in 1..{}'.format(len(est.values)))
    return est.values[:k]


def amplify(estimates, eps):
    """Estimate maximizing the count of others within 2 eps in TV

    Ties go to the lowest index.
    """
    estimates = [tuple(est) for est in estimates]
    if not estimates:
        raise ValueError('Need at least one estimate.')
    counts = [sum(1 for other in estimates if tv(est, other) <= 2 * eps)
              for est in estimates]
    return estimates[counts.index(max(counts))]


def eyd_copies(eps, r):
    """Copies n = ceil(4 r^2 / eps^2) so that Pr[TV > eps] <= 1/4"""
    if eps <= 0 or r < 1:
        raise ValueError('Need eps > 0 and r >= 1')
    return math.ceil(4 * r * r / (eps * eps))


def amplified_eyd(n, alpha, eps, repetitions, rng):
    """Run the EYD estimator repetitions times and amplify the results"""
    if repetitions < 1:
        raise ValueError('repetitions must be positive')
    estimates = [eyd_estimate(n, alpha, rng).values
                 for _ in range(repetitions)]
    return amplify(estimates, eps)


def _rank(alpha):
    return sum(1 for a in alpha if a > 0)


def _seed_from(rng):
    return int(rng.integers(2 ** 31))


def _eyd_errors(count, rng, n, alpha):
    alpha_f = [float(a) for a in alpha]
    return [l2_sq(_estimate_values(sw_sample(n, alpha, rng), n, len(alpha)),
                  alpha_f) for _ in range(count)]


def verify_eyd_bound(n, alpha, reps, rng, use_rank=False, workers=1):
    """Monte Carlo check of E||lam/n - alpha||^2 <= d/n (or r/n)

    Parameters
    ----------
    n : (int)
        number of copies
    alpha : (sequence of float)
        sorted spectrum
    reps : (int)
        replicas, at least 1000
    rng : (numpy.random.Generator)
        source of the replica base seed
    use_rank : (bool)
        compare against rank(alpha) / n instead of d / n (default=False)
    workers : (int)
        worker processes (default=1)

    Returns
    -------
    BoundReport
    """
    alpha = check_prob_vec(alpha, sorted_desc=True)
    if reps < MIN_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_REPS))
    dim = _rank(alpha) if use_rank else len(alpha)
    values = run_replicas(partial(_eyd_errors, n=n, alpha=alpha), reps,
                          _seed_from(rng), workers=workers)
    name = 'E||lam/n - alpha||^2 <= {}/n'.format('r' if use_rank else 'd')
    return BoundReport.from_values(
        'eyd', {'n': n, 'alpha': alpha, 'use_rank': use_rank}, values,
        dim / n, name, ref='EYD mean-square bound')


def exact_eyd_error(n, alpha):
    """Exact E||lam/n - alpha||^2 from the pmf"""
    alpha = check_prob_vec(alpha)
    pmf = sw_pmf(n, alpha)
    return pmf_expectation(pmf, lambda lam: l2_sq(
        [Fraction(p, n) if isinstance(a, Fraction) else p / n
         for p, a in zip(lam.padded(len(alpha)), alpha)], alpha))


def verify_eyd_exact(n, alpha, use_rank=False):
    """Exact check of the EYD bound; zero tolerance with rational alpha"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    dim = _rank(alpha) if use_rank else len(alpha)
    name = 'E||lam/n - alpha||^2 <= {}/n'.format('r' if use_rank else 'd')
    return BoundReport.from_exact('eyd_exact', {'n': n, 'alpha': alpha},
                                  exact_eyd_error(n, alpha),
                                  Fraction(dim, n), name,
                                  ref='EYD mean-square bound')


def _tv_exceeds(count, rng, n, alpha, eps):
    alpha_f = [float(a) for a in alpha]
    return [float(tv(eyd_estimate(n, alpha, rng).values, alpha_f) > eps)
            for _ in range(count)]


def verify_eyd_tail(eps, alpha, reps, rng, workers=1):
    """Pr[TV(lam/n, alpha) > eps] < 1/4 at n = eyd_copies(eps, rank)"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    n = eyd_copies(eps, _rank(alpha))
    values = run_replicas(partial(_tv_exceeds, n=n, alpha=alpha, eps=eps),
                          reps, _seed_from(rng), workers=workers)
    return BoundReport.from_values(
        'eyd_tail', {'n': n, 'alpha': alpha, 'eps': eps}, values, 0.25,
        'Pr[TV(lam/n, alpha) > eps] <= 1/4 at n = 4r^2/eps^2',
        ref='EYD sample complexity')


def second_moment_sides(n, alpha):
    """(E sum lam_i^2, sum (n alpha_i)^2 + d n), exact for rational alpha"""
    alpha = check_prob_vec(alpha)
    pmf = sw_pmf(n, alpha)
    lhs = pmf_expectation(pmf, lambda lam: sum(p * p for p in lam))
    rhs = sum((n * a) ** 2 for a in alpha) + len(alpha) * n
    return lhs, rhs


def verify_second_moment(n, alpha):
    """E sum lam_i^2 <= sum (n alpha_i)^2 + d n, exactly"""
    lhs, rhs = second_moment_sides(n, alpha)
    return lhs <= rhs


def expected_shape(n, alpha):
    """(E lam_1, ..., E lam_d) from the pmf"""
    alpha = check_prob_vec(alpha)
    pmf = sw_pmf(n, alpha)
    return tuple(pmf_expectation(pmf, lambda lam, i=i: lam.part(i))
                 for i in range(len(alpha)))


def verify_expectation_majorization(n, alpha):
    """(E lam_1, ..., E lam_d) majorizes n alpha, exactly for rational alpha"""
    alpha = check_prob_vec(alpha)
    means = expected_shape(n, alpha)
    target = tuple(n * a for a in alpha)
    exact = all(isinstance(a, Fraction) for a in alpha)
    return majorizes(means, target, 0 if exact else MAJ_TOL)


def topk_bound(n, k):
    """(1.92 k + 0.5) / sqrt(n)"""
    return (1.92 * k + 0.5) / math.sqrt(n)


def _dtvk_errors(count, rng, n, alpha, k):
    alpha_f = [float(a) for a in alpha]
    return [dtvk(k, eyd_estimate(n, alpha, rng).values, alpha_f)
            for _ in range(count)]


def verify_topk_bound(n, alpha, k, reps, rng, workers=1):
    """Monte Carlo check of E dtvk(lam/n, alpha) <= (1.92 k + .5)/sqrt(n)"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    if not 1 <= k <= len(alpha):
        raise ValueError('k must lie in 1..{}'.format(len(alpha)))
    if reps < MIN_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_REPS))
    values = run_replicas(partial(_dtvk_errors, n=n, alpha=alpha, k=k), reps,
                          _seed_from(rng), workers=workers)
    return BoundReport.from_values(
        'topk', {'n': n, 'alpha': alpha, 'k': k}, values, topk_bound(n, k),
        'E dtv_k(lam/n, alpha) <= (1.92k + .5)/sqrt(n)',
        ref='truncated EYD top-k bound')


def verify_topk_exact(n, alpha, k):
    """Exact version of verify_topk_bound from the pmf"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    alpha_f = [float(a) for a in alpha]
    pmf = sw_pmf(n, alpha)
    mean = pmf_expectation(pmf, lambda lam: dtvk(
        k, _estimate_values(lam, n, len(alpha)), alpha_f))
    return BoundReport.from_exact(
        'topk_exact', {'n': n, 'alpha': alpha, 'k': k}, float(mean),
        topk_bound(n, k), 'E dtv_k(lam/n, alpha) <= (1.92k + .5)/sqrt(n)',
        ref='truncated EYD top-k bound')


def _topk_sums(count, rng, n, alpha, k):
    return [sum(sw_sample(n, alpha, rng)[:k]) for _ in range(count)]


def verify_topk_sum_bound(n, alpha, k, reps=None, rng=None, workers=1):
    """sum alpha_i n <= E sum_{i<=k} lam_i <= sum alpha_i n + 2 sqrt(2) k sqrt(n)

    Exact from the pmf when reps is None, otherwise Monte Carlo.

    Returns
    -------
    (upper, lower) : (BoundReport, BoundReport)
    """
    alpha = check_prob_vec(alpha, sorted_desc=True)
    if not 1 <= k <= len(alpha):
        raise ValueError('k must lie in 1..{}'.format(len(alpha)))
    params = {'n': n, 'alpha': alpha, 'k': k}
    head = sum(alpha[:k]) * n
    upper = float(head) + 2 * math.sqrt(2) * k * math.sqrt(n)
    upper_name = 'E sum_{i<=k} lam_i <= n sum_{i<=k} alpha_i + 2sqrt(2)k sqrt(n)'
    lower_name = 'E sum_{i<=k} lam_i >= n sum_{i<=k} alpha_i'
    if reps is None:
        mean = pmf_expectation(sw_pmf(n, alpha), lambda lam: sum(lam[:k]))
        return (BoundReport.from_exact('topk_sum', params, mean, upper,
                                       upper_name, ref=ROW_SUM_REF),
                BoundReport.from_exact('topk_sum', params, mean, head,
                                       lower_name, relation=LOWER,
                                       ref=ROW_SUM_REF))
    values = run_replicas(partial(_topk_sums, n=n, alpha=alpha, k=k), reps,
                          _seed_from(rng), workers=workers)
    return (BoundReport.from_values('topk_sum', params, values, upper,
                                    upper_name, ref=ROW_SUM_REF),
            BoundReport.from_values('topk_sum', params, values, float(head),
                                    lower_name, relation=LOWER,
                                    ref=ROW_SUM_REF))


def _uniform(d):
    return tuple(Fraction(1, d) for _ in range(d))


def _row1(count, rng, n, d):
    alpha = [1.0 / d] * d
    return [sw_sample(n, alpha, rng).part(0) for _ in range(count)]


def verify_uniform_row1(n, d, reps, rng, workers=1):
    """E lam_1 <= n/d + 2 sqrt(n) for uniform alpha (and >= n/d)"""
    if reps < MIN_REPS:
        raise ValueError('reps must be at least {}'.format(MIN_REPS))
    values = run_replicas(partial(_row1, n=n, d=d), reps, _seed_from(rng),
                          workers=workers)
    params = {'n': n, 'd': d}
    return (BoundReport.from_values('uniform_row1', params, values,
                                    n / d + 2 * math.sqrt(n),
                                    'E lam_1 <= n/d + 2sqrt(n)',
                                    ref=UNIFORM_ROW1_REF),
            BoundReport.from_values('uniform_row1', params, values, n / d,
                                    'E lam_1 >= n/d', relation=LOWER,
                                    ref=UNIFORM_ROW1_REF))


def verify_uniform_row1_exact(n, d):
    """Exact version of verify_uniform_row1"""
    mean = pmf_expectation(sw_pmf(n, _uniform(d)), lambda lam: lam.part(0))
    return BoundReport.from_exact('uniform_row1_exact', {'n': n, 'd': d},
                                  float(mean), n / d + 2 * math.sqrt(n),
                                  'E lam_1 <= n/d + 2sqrt(n)',
                                  ref=UNIFORM_ROW1_REF)


def reduction_spectrum(alpha, k):
    """Spectrum beta majorizing alpha, flattened below the top k entries

    beta agrees with alpha on the first k entries, then repeats alpha_{k+1}
    as often as the remaining mass allows, then holds the leftover mass in a
    single smaller entry, then zeros.
    """
    alpha = check_prob_vec(alpha, sorted_desc=True)
    d = len(alpha)
    if not 1 <= k <= d:
        raise ValueError('k must lie in 1..{}'.format(d))
    if k == d:
        return alpha
    exact = all(isinstance(a, Fraction) for a in alpha)
    rest = 1 - sum(alpha[:k])
    level = alpha[k]
    if level == 0:
        return alpha
    copies = int(rest // level)
    bump = rest - copies * level
    if not exact and level - bump < 1e-12:
        copies, bump = copies + 1, 0.0
    copies = min(copies, d - k)
    if not exact and abs(bump) < 1e-12:
        bump = 0.0
    zero = Fraction(0) if exact else 0.0
    beta = list(alpha[:k]) + [level] * copies
    if len(beta) < d:
        beta.append(bump)
    beta.extend([zero] * (d - len(beta)))
    return tuple(beta)


def verify_reduction_dominance(n, alpha, k):
    """E sum_{i<=k} lam_i under alpha <= the same under reduction_spectrum"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    beta = reduction_spectrum(alpha, k)
    lhs = pmf_expectation(sw_pmf(n, alpha), lambda lam: sum(lam[:k]))
    rhs = pmf_expectation(sw_pmf(n, beta), lambda lam: sum(lam[:k]))
    exact = all(isinstance(a, Fraction) for a in alpha)
    return lhs <= rhs if exact else lhs <= rhs + 1e-9


def row1_increments(n, d):
    """Exact delta_m = Pr[box m enters row 1] for uniform alpha, m = 1..n

    delta_m is the expectation of the first transition probability over
    lam ~ SW^{m-1}(1/d, ..., 1/d).
    """
    alpha = _uniform(d)
    deltas = []
    for m in range(1, n + 1):
        pmf = sw_pmf(m - 1, alpha)
        deltas.append(pmf_expectation(
            pmf, lambda lam: transition_probs(lam, alpha)[0]))
    return deltas


def verify_increment_recurrence(n, d):
    """delta_m <= sqrt(d + delta_1 + ... + delta_m) / sqrt(d m) for all m"""
    deltas = [float(v) for v in row1_increments(n, d)]
    total = float(d)
    for m, delta in enumerate(deltas, start=1):
        total += delta
        if delta > math.sqrt(total / (d * m)) + 1e-12:
            return False
    return True


def _increments(count, rng, n, d):
    alpha = [1.0 / d] * d
    out = np.zeros((count, n))
    for row in range(count):
        chain = growth_sample(n, alpha, rng)
        out[row] = np.diff([lam.part(0) for lam in chain])
    return out


def verify_row1_increments(n, d, reps, rng, workers=1):
    """Empirical increments satisfy delta_m <= 1/d + 1/sqrt(m), per m"""
    values = run_replicas(partial(_increments, n=n, d=d), reps,
                          _seed_from(rng), workers=workers)
    return [BoundReport.from_values('row1_increments',
                                    {'n': n, 'd': d, 'm': m},
                                    values[:, m - 1],
                                    1.0 / d + 1.0 / math.sqrt(m),
                                    'delta_m <= 1/d + 1/sqrt(m)',
                                    ref='first-row increment bound')
            for m in range(1, n + 1)]
