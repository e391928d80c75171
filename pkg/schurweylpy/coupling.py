#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Dominance-preserving couplings of tableaux, two-letter words and shapes

Each coupling is built from a Markov kernel that takes a draw from the lower
marginal and returns a draw from the upper one, so that kernels compose.

Classes
-------------------------------------------------------------------------------
BiasedStringCdf
    Distribution function of the symmetric Hamming class of a biased string

Functions
-------------------------------------------------------------------------------
biased_cdf(r, n)
    L_r(l) for l = 0..n // 2
syt_kernel, couple_syt
    Two-row standard tableaux, second row lambda2 -> lambda2 - 1 and chains
symham_kernel, couple_symham
    Words with k (or n - k) copies of the larger letter
biased_kernel, couple_biased
    p-biased and q-biased words on {1, 2}
two_letter_kernel, sw_kernel, couple_sw
    Shapes drawn from SW^n(alpha) and SW^n(beta) with mu dominating lam
verify_cdf_claim, verify_couple_syt, verify_couple_biased, verify_couple_sw
    Dominance and marginal checks
verify_dyck_bijection(n)
    Exhaustive check of the raising bijection
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
import logging
import math

import numpy as np
import scipy.stats

from schurweylpy import dyck
from schurweylpy.partitions import (Partition, PROB_TOL, check_prob_vec,
                                    dominates, majorizes, muirhead_chain)
from schurweylpy.reports import (BoundReport, LOWER, failure_report,
                                 tv_report)
from schurweylpy.schur import dim_syt, sample_ssyt, sample_syt
from schurweylpy.schur_weyl import sample_word, sw_pmf, sw_sample
from schurweylpy.tableaux import (recording_tableau, rsk_inverse,
                                  sh_rsk, shape, substring_lis_dominates,
                                  tableau_dominates)
from schurweylpy.utils import run_replicas

logger = logging.getLogger(__name__)

BIJECTION_MAX_N = 16
WORD_CHECK_MAX_N = 10
SYT_REF = 'two-row SYT coupling'
BIASED_REF = 'biased word coupling'
SW_REF = 'Schur-Weyl dominance coupling'


@dataclass(frozen=True)
class BiasedStringCdf:
    """Distribution function of the symmetric Hamming class

    L_r(l) is the probability that an r-biased word y lies in
    SymHam(n, j) for some j <= l, i.e. that min(#1, #2) <= l.

    Parameters
    ----------
    r : (float or Fraction)
        probability of the letter 1
    n : (int)
        word length
    values : (tuple)
        L_r(0), ..., L_r(n // 2); the last entry is 1
    """
    r: object
    n: int
    values: tuple

    def least_index(self, theta):
        """Least l with L_r(l) >= theta"""
        for index, value in enumerate(self.values):
            if value >= theta:
                return index
        return len(self.values) - 1


@lru_cache(maxsize=256)
def biased_cdf(r, n):
    """Distribution function of min(#1, #2) for an r-biased word

    Exact (Fractions) when r is an int or Fraction, otherwise computed with
    scipy.stats.binom.

    Examples
    --------
        biased_cdf(Fraction(1, 2), 2).values   # (Fraction(1, 2), 1)
    """
    if not 0 <= r <= 1:
        raise ValueError('r must lie in [0, 1], got {}'.format(r))
    if n < 0:
        raise ValueError('n must be nonnegative')
    values = []
    if isinstance(r, (int, Fraction)):
        r = Fraction(r)
        pmf = [math.comb(n, h) * (1 - r) ** h * r ** (n - h)
               for h in range(n + 1)]
        for ell in range(n // 2 + 1):
            if 2 * ell >= n:
                values.append(Fraction(1))
            else:
                values.append(sum(pmf[:ell + 1]) + sum(pmf[n - ell:]))
    else:
        for ell in range(n // 2 + 1):
            if 2 * ell >= n:
                values.append(1.0)
            else:
                values.append(float(
                    scipy.stats.binom.cdf(ell, n, 1.0 - float(r))
                    + scipy.stats.binom.sf(n - ell - 1, n, 1.0 - float(r))))
    return BiasedStringCdf(r, n, tuple(values))


def _check_extreme(p, q):
    if abs(float(q) - 0.5) < abs(float(p) - 0.5) - PROB_TOL:
        raise ValueError('|q - 1/2| must be at least |p - 1/2|, got p={}, '
                         'q={}'.format(p, q))


def _two_row(q_tab, lambda2):
    if len(q_tab) > 2:
        raise ValueError('Expected at most two rows, got {}'.format(q_tab))
    second = len(q_tab[1]) if len(q_tab) == 2 else 0
    if second > lambda2:
        raise ValueError('Second row {} exceeds {}'.format(second, lambda2))
    return second


def syt_kernel(q_tab, lambda2, rng):
    """Move a uniform tableau with second row <= lambda2 to one with second
    row <= lambda2 - 1

    Tableaux with second row exactly lambda2 go through dyck_f at a uniformly
    chosen downstep; the rest are kept.  The output dominates the input.
    """
    second = _two_row(q_tab, lambda2)
    if lambda2 < 1 or second < lambda2:
        return tuple(q_tab)
    path = dyck.tableau_to_dyck(q_tab)
    downs = [i for i, step in enumerate(path) if step == dyck.DOWN]
    s1 = downs[int(rng.integers(len(downs)))]
    w_prime, _ = dyck.dyck_f(path, s1)
    return dyck.dyck_to_tableau(w_prime)


def _syt_chain(q_tab, lambda2_from, lambda2_to, rng):
    for lambda2 in range(lambda2_from, lambda2_to, -1):
        q_tab = syt_kernel(q_tab, lambda2, rng)
    return q_tab


def couple_syt(n, lambda2_from, lambda2_to, rng):
    """Coupled uniform tableaux Q (second row <= lambda2_from) and Q' (second
    row <= lambda2_to) with Q' dominating Q

    Returns
    -------
    (q_tab, q_prime) : (tuple of tuple, tuple of tuple)
    """
    if not 0 <= lambda2_to <= lambda2_from <= n // 2:
        raise ValueError('Need 0 <= lambda2_to <= lambda2_from <= n // 2')
    q_tab = dyck.sample_syt_leq(n, lambda2_from, rng)
    return q_tab, _syt_chain(q_tab, lambda2_from, lambda2_to, rng)


def _binary_word(word):
    word = tuple(int(letter) for letter in word)
    if any(letter not in (1, 2) for letter in word):
        raise ValueError('Expected a word over {1, 2}.')
    return word


def _insertion_tableau(lam, twos):
    """The insertion tableau of shape lam holding ``twos`` copies of 2"""
    n = lam.size()
    ones = n - twos
    if ones < lam.part(1) or twos < lam.part(1):
        raise ValueError('No insertion tableau of shape {} with {} twos'
                         .format(tuple(lam), twos))
    rows = [(1,) * ones + (2,) * (lam.part(0) - ones), (2,) * lam.part(1)]
    return tuple(row for row in rows if row)


def _pick_weight(n, k, bias, rng):
    """Hamming weight in {k, n - k}, uniform or by its r-biased odds"""
    if 2 * k == n:
        return k
    if bias is None:
        return k if rng.random() < 0.5 else n - k
    r = float(bias)
    low = r ** (n - k) * (1.0 - r) ** k
    high = r ** k * (1.0 - r) ** (n - k)
    return k if rng.random() * (low + high) < low else n - k


def symham_kernel(word, k_prime, rng, bias=None):
    """Map a word of SymHam(n, k) to one of SymHam(n, k_prime), k_prime <= k

    The recording tableau is pushed down with the tableau kernel and the new
    word is rebuilt from it with the unique insertion tableau of the chosen
    Hamming weight.

    Parameters
    ----------
    word : (tuple of int)
        word over {1, 2}
    k_prime : (int)
        target class, at most min(#1, #2) of word
    rng : (numpy.random.Generator)
    bias : (float or NoneType)
        if given, the Hamming weight of the output is drawn with the odds of
        a bias-biased word; otherwise both weights are equally likely
        (default=None)

    Returns
    -------
    tuple of int
    """
    word = _binary_word(word)
    n = len(word)
    k = min(word.count(2), n - word.count(2))
    if not 0 <= k_prime <= k:
        raise ValueError('Need 0 <= k_prime <= {}, got {}'.format(k, k_prime))
    if k_prime == k and bias is None:
        return word
    q_prime = _syt_chain(recording_tableau(word), k, k_prime, rng)
    twos = _pick_weight(n, k_prime, bias, rng)
    return rsk_inverse(_insertion_tableau(shape(q_prime), twos), q_prime)


def _random_hamming(n, twos, rng):
    word = np.ones(n, dtype=int)
    word[rng.choice(n, size=twos, replace=False)] = 2
    return tuple(int(letter) for letter in word)


def couple_symham(n, k, k_prime, rng):
    """Coupled uniform words of SymHam(n, k) and SymHam(n, k_prime) with the
    second dominating the first in every substring LIS"""
    if not 0 <= k_prime <= k <= n // 2:
        raise ValueError('Need 0 <= k_prime <= k <= n // 2')
    word = _random_hamming(n, _pick_weight(n, k, None, rng), rng)
    return word, symham_kernel(word, k_prime, rng)


def biased_kernel(word, p, q, rng):
    """Map a p-biased word on {1, 2} to a q-biased one dominating it

    The class k = min(#1, #2) of the input fixes theta uniformly on
    (L_p(k - 1), L_p(k)]; the output class is the least k' with
    L_q(k') >= theta.
    """
    _check_extreme(p, q)
    word = _binary_word(word)
    n = len(word)
    k = min(word.count(2), n - word.count(2))
    cdf_p = biased_cdf(p, n)
    cdf_q = biased_cdf(q, n)
    low = float(cdf_p.values[k - 1]) if k > 0 else 0.0
    theta = low + (1.0 - rng.random()) * (float(cdf_p.values[k]) - low)
    k_prime = min(cdf_q.least_index(theta), k)
    return symham_kernel(word, k_prime, rng, bias=q)


def couple_biased(p, q, n, rng):
    """Coupled p-biased and q-biased words on {1, 2}, |q - 1/2| >= |p - 1/2|

    Returns
    -------
    (word, x) : (tuple of int, tuple of int)
        x dominates word in the LIS of every substring
    """
    _check_extreme(p, q)
    word = sample_word(n, (p, 1 - p), rng)
    return word, biased_kernel(word, p, q, rng)


def _close(a, b):
    return abs(float(a) - float(b)) <= PROB_TOL


def two_letter_kernel(word, alpha, beta, rng):
    """Push an alpha-distributed word to a beta-distributed one

    alpha and beta agree except on letters 1 and 2, with
    alpha_1 + alpha_2 = beta_1 + beta_2 and beta_1 >= alpha_1 >= alpha_2.
    The letters 1 and 2 are coupled with biased_kernel; the other letters
    stay in place.
    """
    if len(alpha) != len(beta) or len(alpha) < 2:
        raise ValueError('Dimension mismatch')
    if not all(_close(a, b) for a, b in zip(alpha[2:], beta[2:])):
        raise ValueError('Spectra may only differ on the first two letters.')
    total = alpha[0] + alpha[1]
    if not _close(total, beta[0] + beta[1]):
        raise ValueError('The first two letters must carry equal mass.')
    if total == 0:
        return tuple(word)
    p, q = alpha[0] / total, beta[0] / total
    positions = [i for i, letter in enumerate(word) if letter in (1, 2)]
    if not positions:
        return tuple(word)
    coupled = biased_kernel([word[i] for i in positions], p, q, rng)
    result = list(word)
    for i, letter in zip(positions, coupled):
        result[i] = letter
    return tuple(result)


def _relabel(vector, order):
    return tuple(vector[j] for j in order)


def sw_kernel(lam, alpha, beta, rng):
    """Move lam ~ SW^n(alpha) to mu ~ SW^n(beta) with mu dominating lam

    Walks the two-coordinate chain from alpha up to beta.  At each step the
    letters are relabelled so that the moving coordinates become 1 and 2, a
    word with the current law is drawn given its shape (weighted insertion
    tableau, uniform recording tableau) and pushed with two_letter_kernel.
    """
    lam = Partition(lam)
    chain = muirhead_chain(beta, alpha)
    d = len(alpha)
    for step in range(len(chain) - 1, 0, -1):
        lower, upper = chain[step], chain[step - 1]
        moved = [j for j in range(d) if not _close(lower[j], upper[j])]
        if not moved:
            continue
        if len(moved) != 2:
            raise AssertionError('Chain step moves {} coordinates'.format(
                len(moved)))
        order = moved + [j for j in range(d) if j not in moved]
        lower_p, upper_p = _relabel(lower, order), _relabel(upper, order)
        p_tab = sample_ssyt(lam, lower_p, rng)
        word = rsk_inverse(p_tab, sample_syt(lam, rng))
        lam = sh_rsk(two_letter_kernel(word, lower_p, upper_p, rng))
    return lam


def couple_sw(alpha, beta, n, rng):
    """Coupled lam ~ SW^n(alpha) and mu ~ SW^n(beta) with mu dominating lam

    Parameters
    ----------
    alpha, beta : (sequence of float or Fraction)
        sorted spectra of equal dimension, beta majorizing alpha
    n : (int)
    rng : (numpy.random.Generator)

    Returns
    -------
    (lam, mu) : (Partition, Partition)
    """
    alpha = check_prob_vec(alpha, sorted_desc=True)
    beta = check_prob_vec(beta, sorted_desc=True)
    if len(alpha) != len(beta):
        raise ValueError('Dimension mismatch')
    if not majorizes(beta, alpha):
        raise ValueError('{} does not majorize {}'.format(beta, alpha))
    lam = sw_sample(n, alpha, rng)
    return lam, sw_kernel(lam, alpha, beta, rng)


def verify_cdf_claim(p, q, n):
    """Exact check that L_q(l) >= L_p(l) for every l"""
    _check_extreme(p, q)
    cdf_p, cdf_q = biased_cdf(p, n), biased_cdf(q, n)
    gap = min(b - a for a, b in zip(cdf_p.values, cdf_q.values))
    return BoundReport.from_exact('biased_cdf', {'p': p, 'q': q, 'n': n}, gap,
                                  0, 'min_l L_q(l) - L_p(l) >= 0', LOWER,
                                  ref='biased CDF dominance')


def _syt_draws(count, rng, n, lambda2_from, lambda2_to):
    rows = []
    for _ in range(count):
        q_tab, q_prime = couple_syt(n, lambda2_from, lambda2_to, rng)
        rows.append([int(not tableau_dominates(q_prime, q_tab)),
                     shape(q_tab).part(1), shape(q_prime).part(1)])
    return rows


def _second_row_law(n, lambda2):
    total = dyck.count_syt_leq(n, lambda2)
    return {(j,): Fraction(dim_syt((n - j, j)), total)
            for j in range(lambda2 + 1)}


def verify_couple_syt(n, lambda2_from, lambda2_to, reps, rng, workers=1):
    """Dominance and second-row marginals of couple_syt

    Returns
    -------
    reports : (list of BoundReport)
        failure fraction of Q' dominating Q (must be 0), then TV of the
        second-row length of Q and of Q' against the uniform family
    """
    params = {'n': n, 'lambda2_from': lambda2_from, 'lambda2_to': lambda2_to}
    values = run_replicas(partial(_syt_draws, n=n, lambda2_from=lambda2_from,
                                  lambda2_to=lambda2_to), reps,
                          int(rng.integers(2 ** 31)), workers=workers)
    return [failure_report('couple_syt', params, float(values[:, 0].mean()),
                           reps, "Pr[Q' does not dominate Q] == 0",
                           ref=SYT_REF),
            tv_report('couple_syt', params, values[:, 1:2],
                      _second_row_law(n, lambda2_from),
                      'TV(l2(Q), uniform SYT) <= 0.02', ref=SYT_REF),
            tv_report('couple_syt', params, values[:, 2:3],
                      _second_row_law(n, lambda2_to),
                      "TV(l2(Q'), uniform SYT) <= 0.02", ref=SYT_REF)]


def _biased_draws(count, rng, n, p, q):
    rows = []
    for _ in range(count):
        word, x = couple_biased(p, q, n, rng)
        dominated = tableau_dominates(recording_tableau(x),
                                      recording_tableau(word))
        rows.append([int(not dominated), word.count(2), x.count(2)])
    return rows


def _weight_law(n, r):
    return {(h,): scipy.stats.binom.pmf(h, n, 1.0 - float(r))
            for h in range(n + 1)}


def verify_couple_biased(p, q, n, reps, rng, workers=1):
    """Dominance and Hamming-weight marginals of couple_biased"""
    params = {'p': p, 'q': q, 'n': n}
    values = run_replicas(partial(_biased_draws, n=n, p=p, q=q), reps,
                          int(rng.integers(2 ** 31)), workers=workers)
    return [failure_report('couple_biased', params,
                           float(values[:, 0].mean()), reps,
                           'Pr[x does not dominate w] == 0', ref=BIASED_REF),
            tv_report('couple_biased', params, values[:, 1:2],
                      _weight_law(n, p), 'TV(#2(w), Bin(n, 1-p)) <= 0.02',
                      ref=BIASED_REF),
            tv_report('couple_biased', params, values[:, 2:3],
                      _weight_law(n, q), 'TV(#2(x), Bin(n, 1-q)) <= 0.02',
                      ref=BIASED_REF)]


def _sw_draws(count, rng, n, alpha, beta):
    d = len(alpha)
    rows = []
    for _ in range(count):
        lam, mu = couple_sw(alpha, beta, n, rng)
        rows.append([int(not dominates(mu, lam))]
                    + list(lam.padded(d)) + list(mu.padded(d)))
    return rows


def verify_couple_sw(alpha, beta, n, reps, rng, workers=1):
    """Dominance and marginals of couple_sw against sw_pmf"""
    alpha = check_prob_vec(alpha, sorted_desc=True)
    beta = check_prob_vec(beta, sorted_desc=True)
    d = len(alpha)
    params = {'alpha': alpha, 'beta': beta, 'n': n}
    values = run_replicas(partial(_sw_draws, n=n, alpha=alpha, beta=beta),
                          reps, int(rng.integers(2 ** 31)), workers=workers)

    def padded(pmf):
        return {lam.padded(d): prob for lam, prob in pmf.items()}

    return [failure_report('couple_sw', params, float(values[:, 0].mean()),
                           reps, 'Pr[mu does not dominate lam] == 0',
                           ref=SW_REF),
            tv_report('couple_sw', params, values[:, 1:d + 1],
                      padded(sw_pmf(n, alpha)),
                      'TV(lam, SW^n(alpha)) <= 0.02', ref=SW_REF),
            tv_report('couple_sw', params, values[:, d + 1:],
                      padded(sw_pmf(n, beta)),
                      'TV(mu, SW^n(beta)) <= 0.02', ref=SW_REF)]


def _lattice_word(path):
    """A word over {1, 2} whose recording tableau is the tableau of path"""
    q_tab = dyck.dyck_to_tableau(path)
    lam = shape(q_tab)
    return rsk_inverse(_insertion_tableau(lam, lam.part(1)), q_tab)


def _bijection_failures(n, lambda2, check_words):
    failures = {'inverse': 0, 'multiplicity': 0, 'dominance': 0, 'words': 0}
    images = {}
    pairs = 0
    for path in dyck.iter_dyck_paths(n, lambda2):
        for s1, step in enumerate(path):
            if step != dyck.DOWN:
                continue
            pairs += 1
            w_prime, s1_prime = dyck.dyck_f(path, s1)
            if dyck.dyck_g(w_prime, s1_prime, lambda2) != (path, s1):
                failures['inverse'] += 1
            if (w_prime, s1_prime) in images:
                failures['inverse'] += 1
            images[(w_prime, s1_prime)] = path
            if not dyck.dyck_dominates(w_prime, path):
                failures['dominance'] += 1
            if check_words and not substring_lis_dominates(
                    _lattice_word(w_prime), _lattice_word(path)):
                failures['words'] += 1
    multiplicity = {}
    for w_prime, _ in images:
        multiplicity[w_prime] = multiplicity.get(w_prime, 0) + 1
    expected = n - 2 * lambda2 + 1
    for downs in range(lambda2):
        for w_prime in dyck.iter_dyck_paths(n, downs):
            if multiplicity.get(w_prime, 0) != expected:
                failures['multiplicity'] += 1
    return failures, pairs


def verify_dyck_bijection(n, check_words=None):
    """Exhaustive check of dyck_f / dyck_g for every lambda2 <= n // 2

    For each lambda2 the reports count: pairs where g(f(x)) != x or f is
    not injective; image paths whose multiplicity is not n - 2 lambda2 + 1;
    mapped pairs that fail the iterated-behead height comparison; and, for
    n <= 10, pairs whose words fail the brute-force substring LIS check.
    All counts must be zero.
    """
    if not 2 <= n <= BIJECTION_MAX_N:
        raise ValueError('verify_dyck_bijection needs 2 <= n <= {}'.format(
            BIJECTION_MAX_N))
    if check_words is None:
        check_words = n <= WORD_CHECK_MAX_N
    reports = []
    for lambda2 in range(1, n // 2 + 1):
        failures, pairs = _bijection_failures(n, lambda2, check_words)
        params = {'n': n, 'lambda2': lambda2}
        names = {'inverse': 'g(f(W, s1)) == (W, s1) for all pairs',
                 'multiplicity': "each W' appears n - 2 lambda2 + 1 times",
                 'dominance': "W' stays above W after every beheading",
                 'words': "substring LIS of W' >= that of W"}
        for key, name in names.items():
            if key == 'words' and not check_words:
                continue
            reports.append(failure_report('dyck_bijection', params,
                                          failures[key], pairs, name,
                                          ref='Dyck path bijection'))
        logger.info('n=%d lambda2=%d: %d pairs checked', n, lambda2, pairs)
    return reports
