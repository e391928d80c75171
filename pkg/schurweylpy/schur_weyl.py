#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""The Schur-Weyl distribution SW^n(alpha)

SW^n(alpha) is the law of the RSK shape of an n-letter word whose letters are
drawn independently from alpha.

Functions
-------------------------------------------------------------------------------
sw_pmf(n, alpha)
    Exact pmf, dim_syt(lam) * s_lam(alpha) for every lam of n with <= d rows
sw_sample(n, alpha, rng)
    One draw, by RSK on a random word
growth_sample(n, alpha, rng)
    The growth chain of shapes produced while inserting a random word
transition_probs(lam, alpha)
    One-step probabilities s_{lam+e_i}(alpha) / s_lam(alpha)
pmf_to_json(pmf)
    Serialize a pmf as a list of {partition, probability}
-------------------------------------------------------------------------------
"""
from fractions import Fraction
import json
import logging

import numpy as np

from schurweylpy.partitions import (_as_partition, check_prob_vec,
                                    partitions_of)
from schurweylpy.schur import dim_syt, schur_ssyt
from schurweylpy.tableaux import rsk_shapes, sh_rsk

logger = logging.getLogger(__name__)

PMF_MAX_N = 20
PMF_MAX_D = 4


def sw_pmf(n, alpha):
    """Exact probability mass function of SW^n(alpha)

    Parameters
    ----------
    n : (int)
        number of letters, at most 20
    alpha : (sequence of float or Fraction)
        probability vector of dimension at most 4

    Returns
    -------
    pmf : (dict)
        Partition -> probability, in lexicographically descending order of
        partitions; probabilities are Fractions when alpha is exact

    Examples
    --------
        sw_pmf(2, (Fraction(1, 2), Fraction(1, 2)))
        # {Partition((2,)): Fraction(3, 4), Partition((1, 1)): Fraction(1, 4)}
    """
    alpha = check_prob_vec(alpha)
    if n < 0 or n > PMF_MAX_N:
        raise ValueError('sw_pmf needs 0 <= n <= {}'.format(PMF_MAX_N))
    if len(alpha) > PMF_MAX_D:
        raise ValueError('sw_pmf needs d <= {}'.format(PMF_MAX_D))
    return {lam: dim_syt(lam) * schur_ssyt(lam, alpha)
            for lam in partitions_of(n, len(alpha))}


def pmf_expectation(pmf, func):
    """Sum of func(lam) * Pr[lam] over the pmf"""
    return sum(prob * func(lam) for lam, prob in pmf.items())


def _float_probs(alpha):
    probs = np.asarray([float(a) for a in check_prob_vec(alpha)])
    probs = np.clip(probs, 0.0, None)
    return probs / probs.sum()


def sample_word(n, alpha, rng):
    """Word of n letters from 1..d drawn independently from alpha"""
    probs = _float_probs(alpha)
    return tuple(int(v) + 1 for v in rng.choice(len(probs), size=n, p=probs))


def sw_sample(n, alpha, rng):
    """Draw lam ~ SW^n(alpha) as the RSK shape of a random word"""
    return sh_rsk(sample_word(n, alpha, rng))


def growth_sample(n, alpha, rng):
    """Growth chain [(), lam^(1), ..., lam^(n)] of a random word

    Each shape is the RSK shape of the length-t prefix, so lam^(t) is
    distributed as SW^t(alpha).
    """
    return rsk_shapes(sample_word(n, alpha, rng))


def transition_probs(lam, alpha):
    """Probabilities of adding a box to each row of lam

    Parameters
    ----------
    lam : (Partition)
        current shape, at most d rows
    alpha : (sequence of float or Fraction)
        probability vector

    Returns
    -------
    probs : (tuple)
        p_i = s_{lam+e_i}(alpha) / s_lam(alpha) for i = 1..d, zero when
        lam + e_i is not a partition; exact when alpha is exact

    Raises
    ------
    ValueError
        if lam has more than d rows or s_lam(alpha) vanishes
    """
    lam = _as_partition(lam)
    alpha = check_prob_vec(alpha)
    d = len(alpha)
    if len(lam) > d:
        raise ValueError('{} has more than {} rows'.format(tuple(lam), d))
    base = schur_ssyt(lam, alpha)
    if base == 0:
        raise ValueError('s_lam(alpha) vanishes for {}'.format(tuple(lam)))
    zero = Fraction(0) if isinstance(base, Fraction) else 0.0
    return tuple(schur_ssyt(lam.add_box(i), alpha) / base
                 if lam.can_add_box(i) else zero for i in range(d))


def pmf_to_json(pmf):
    """Serialize a pmf as a JSON list of {partition, probability}"""
    return json.dumps([{'partition': list(lam), 'probability': float(prob)}
                       for lam, prob in pmf.items()])
