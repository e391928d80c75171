#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Schur polynomials, dimension formulas and tableau samplers

Schur polynomials are evaluated from their monomial expansion, built once per
(shape, number of variables) by the branching rule on the largest letter and
cached.  Coefficients are exact integers, so evaluation at Fractions is exact
and evaluation at floats has no cancellation.

Functions
-------------------------------------------------------------------------------
schur_ssyt(lam, x)
    Sum over semistandard tableaux (reference evaluator)
schur_det(lam, x)
    Ratio of alternants (distinct arguments only)
dim_syt(lam), dim_weyl(lam, d)
    Hook-length and Weyl dimension formulas
normalized_schur(lam, x)
    s_lam(x) / s_lam(1, ..., 1)
weyl_ratio(lam, i, m)
    Ratio of upper-partition dimension ratios and its closed form
schur_values(lam, points)
    Vectorized evaluation at many float points
iter_ssyt(lam, d)
    Explicit enumeration of semistandard tableaux
sample_ssyt(lam, x, rng), sample_syt(lam, rng)
    Weighted semistandard / uniform standard tableau of a given shape
-------------------------------------------------------------------------------
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
import logging
import math

import numpy as np

from schurweylpy.partitions import Partition, _as_partition, upper_partition

logger = logging.getLogger(__name__)

SSYT_MAX_SIZE = 30
DIM_SYT_MAX_SIZE = 60
DISTINCT_GAP = 1e-8


def _is_exact(x):
    return all(isinstance(v, (int, Fraction)) for v in x)


def _strips_below(lam, d):
    """Shapes mu with lam / mu a horizontal strip and length(mu) <= d - 1"""
    ranges = []
    for i in range(len(lam)):
        low = lam.part(i + 1)
        high = lam.part(i) if i < d - 1 else 0
        if high < low:
            return
        ranges.append(range(low, high + 1))
    for parts in product(*ranges):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _monomials(lam, d):
    """Monomial expansion of s_lam(x_1..x_d) as {exponent tuple: count}"""
    if len(lam) > d:
        return {}
    if d == 0:
        return {(): 1}
    terms = {}
    for mu in _strips_below(lam, d):
        strip = lam.size() - mu.size()
        for exps, count in _monomials(mu, d - 1).items():
            key = exps + (strip,)
            terms[key] = terms.get(key, 0) + count
    return terms


def _evaluate(terms, x):
    if _is_exact(x):
        return sum((count * math.prod(Fraction(v) ** e for v, e in zip(x, exps))
                    for exps, count in terms.items()), Fraction(0))
    return math.fsum(count * math.prod(float(v) ** e
                                       for v, e in zip(x, exps))
                     for exps, count in terms.items())


def schur_ssyt(lam, x):
    """Schur polynomial as a sum over semistandard tableaux

    Parameters
    ----------
    lam : (Partition or sequence of int)
        shape, at most 30 boxes
    x : (sequence of float or Fraction)
        arguments x_1..x_d

    Returns
    -------
    value : (Fraction or float)
        exact when every argument is an int or Fraction; zero when lam has
        more than d rows

    Examples
    --------
        schur_ssyt((2, 1), (1, 1))   # Fraction(2)
    """
    lam = _as_partition(lam)
    if lam.size() > SSYT_MAX_SIZE:
        raise ValueError('schur_ssyt is limited to {} boxes'.format(
            SSYT_MAX_SIZE))
    x = tuple(x)
    terms = _monomials(lam, len(x))
    if not terms:
        return Fraction(0) if _is_exact(x) else 0.0
    return _evaluate(terms, x)


def iter_ssyt(lam, d):
    """Generate every semistandard tableau of shape lam with letters 1..d"""
    lam = _as_partition(lam)
    if len(lam) > d:
        return
    if d == 0:
        yield ()
        return
    for mu in _strips_below(lam, d):
        for inner in iter_ssyt(mu, d - 1):
            rows = [list(inner[r]) if r < len(inner) else []
                    for r in range(len(lam))]
            for r in range(len(lam)):
                rows[r].extend([d] * (lam[r] - mu.part(r)))
            yield tuple(tuple(row) for row in rows)


def schur_det(lam, x):
    """Schur polynomial as a ratio of alternants a_{lam+delta} / a_delta

    ``lam`` may be any integer sequence; sequences that are not partitions
    (such as an invalid lam + e_i) evaluate to 0.

    Raises
    ------
    ValueError
        if two arguments agree to relative gap 1e-8; use schur_ssyt there
    """
    x = np.asarray([float(v) for v in x])
    d = len(x)
    parts = [int(p) for p in lam]
    try:
        lam = Partition(parts)
    except ValueError:
        return 0.0
    if len(lam) > d:
        return 0.0
    for i in range(d):
        for j in range(i + 1, d):
            scale = max(abs(x[i]), abs(x[j]), np.finfo(float).tiny)
            if abs(x[i] - x[j]) <= DISTINCT_GAP * scale:
                raise ValueError(''.join(('schur_det needs distinct ',
                                          'arguments; use schur_ssyt for ',
                                          'repeated entries')))
    exps = np.arange(d - 1, -1, -1)
    shifted = np.asarray(lam.padded(d)) + exps
    numerator = np.linalg.det(x[:, None] ** shifted[None, :])
    denominator = np.linalg.det(x[:, None] ** exps[None, :])
    return float(numerator / denominator)


def dim_syt(lam):
    """Number of standard tableaux of shape lam (hook-length formula)"""
    lam = _as_partition(lam)
    if lam.size() > DIM_SYT_MAX_SIZE:
        raise ValueError('dim_syt is limited to {} boxes'.format(
            DIM_SYT_MAX_SIZE))
    conj = lam.conjugate()
    hooks = math.prod(lam[i] - j + conj[j] - i - 1 for i, j in lam.boxes())
    return math.factorial(lam.size()) // hooks


def dim_weyl(lam, d):
    """Weyl dimension formula; number of SSYT of shape lam in letters 1..d"""
    lam = _as_partition(lam)
    if len(lam) > d:
        return 0
    parts = lam.padded(d)
    value = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            value *= Fraction(parts[i] - parts[j] + j - i, j - i)
    return int(value)


def dim_weyl_content(lam, d):
    """dim_syt(lam) / |lam|! times the product of (d + j - i) over boxes"""
    lam = _as_partition(lam)
    value = Fraction(dim_syt(lam), math.factorial(lam.size()))
    for i, j in lam.boxes():
        value *= d + j - i
    return value


def normalized_schur(lam, x):
    """s_lam(x) / s_lam(1, ..., 1), in [0, 1] for probability vectors

    Exact (a Fraction) when x holds ints or Fractions.
    """
    lam = _as_partition(lam)
    dim = dim_weyl(lam, len(x))
    if dim == 0:
        raise ValueError('{} has more than {} rows'.format(tuple(lam),
                                                           len(x)))
    return schur_ssyt(lam, x) / dim


def weyl_ratio(lam, i, m):
    """Compare upper-partition dimension ratios at m and m - 1 variables

    With u_m = upper_partition(lam, m), computes

        [dim(u_m + e_i, m) / dim(u_m, m)] / [dim(u_{m-1} + e_i, m-1) /
                                             dim(u_{m-1}, m-1)]

    for rows 1 <= i < m (1-indexed), along with the closed form
    1 + 1 / ((lam_i - lam_m) + (m - i)).

    Returns
    -------
    (ratio, closed_form) : (Fraction, Fraction)
        or None when u_{m-1} + e_i is not a partition
    """
    lam = _as_partition(lam)
    if not 1 <= i < m:
        raise ValueError('Need 1 <= i < m, got i={}, m={}'.format(i, m))
    upper = upper_partition(lam, m)
    upper_prev = upper_partition(lam, m - 1)
    if not upper_prev.can_add_box(i - 1):
        return None
    left = Fraction(dim_weyl(upper.add_box(i - 1), m), dim_weyl(upper, m))
    right = Fraction(dim_weyl(upper_prev.add_box(i - 1), m - 1),
                     dim_weyl(upper_prev, m - 1))
    closed = 1 + Fraction(1, lam.part(i - 1) - lam.part(m - 1) + m - i)
    return left / right, closed


def _draw_index(weights, rng):
    """Index drawn with probability proportional to weights

    Integer weights are sampled exactly; other weights through floats.
    """
    if all(isinstance(w, int) for w in weights):
        target = int(rng.integers(sum(weights)))
        for index, weight in enumerate(weights):
            if target < weight:
                return index
            target -= weight
    probs = np.asarray([float(w) for w in weights])
    return int(rng.choice(len(probs), p=probs / probs.sum()))


def sample_syt(lam, rng):
    """Uniformly random standard tableau of shape lam

    The largest entry sits in a corner chosen with probability
    dim_syt(lam - corner) / dim_syt(lam); repeat on the smaller shape.
    """
    lam = _as_partition(lam)
    rows = [[None] * part for part in lam]
    shape = lam
    for entry in range(lam.size(), 0, -1):
        corners = shape.corners()
        weights = [dim_syt(shape.remove_box(r)) for r in corners]
        row = corners[_draw_index(weights, rng)]
        rows[row][shape[row] - 1] = entry
        shape = shape.remove_box(row)
    return tuple(tuple(row) for row in rows)


def sample_ssyt(lam, x, rng):
    """Random semistandard tableau T of shape lam with Pr[T] ∝ x^T

    The cells holding the largest letter d form a horizontal strip lam / mu,
    chosen with weight x_d^{|lam/mu|} s_mu(x_1..x_{d-1}); then recurse.
    """
    lam = _as_partition(lam)
    x = tuple(x)
    if len(lam) > len(x):
        raise ValueError('{} has more than {} rows'.format(tuple(lam),
                                                           len(x)))
    chain = [lam]
    for d in range(len(x), 0, -1):
        shape = chain[-1]
        options = list(_strips_below(shape, d))
        weights = [x[d - 1] ** (shape.size() - mu.size())
                   * _evaluate(_monomials(mu, d - 1), x[:d - 1])
                   if _monomials(mu, d - 1) else 0 for mu in options]
        chain.append(options[_draw_index(weights, rng)])
    rows = [[] for _ in lam]
    # chain[k] is the shape filled by letters 1..d-k
    for letter in range(1, len(x) + 1):
        outer = chain[len(x) - letter]
        inner = chain[len(x) - letter + 1]
        for r in range(len(lam)):
            rows[r].extend([letter] * (outer.part(r) - inner.part(r)))
    return tuple(tuple(row) for row in rows if row)


def schur_values(lam, points):
    """s_lam evaluated at each row of a float array of shape (N, d)"""
    lam = _as_partition(lam)
    points = np.asarray(points, dtype=float)
    terms = _monomials(lam, points.shape[-1])
    if not terms:
        return np.zeros(points.shape[:-1])
    exps = np.asarray(list(terms.keys()), dtype=float)
    coeffs = np.asarray(list(terms.values()), dtype=float)
    powers = np.prod(points[..., None, :] ** exps, axis=-1)
    return powers @ coeffs
