#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Partitions, dominance order, majorization and Muirhead chains

Classes
-------------------------------------------------------------------------------
Partition
    Immutable integer partition with trailing zeros normalized away

Functions
-------------------------------------------------------------------------------
majorizes(x, y, tol=1e-9)
    Majorization test for real vectors
dominance_order(lam, mu)
    Compare two partitions of the same size in dominance order
dominates(mu, lam)
    True if mu dominates lam
muirhead_chain(beta, alpha)
    Chain of two-coordinate transfers from beta down to alpha
partitions_of(n, max_length=None)
    All partitions of n in lexicographically descending order
check_prob_vec(alpha, sorted_desc=False)
    Validate a probability vector
upper_partition(lam, m), lower_partition(lam, m)
    Split lam into its top m rows above lam_{m+1} and the remainder
-------------------------------------------------------------------------------
"""
from fractions import Fraction
from itertools import accumulate
import logging

logger = logging.getLogger(__name__)

PROB_TOL = 1e-12
MAJ_TOL = 1e-9

GREATER_EQ = 'GreaterEq'
LESS_EQ = 'LessEq'
EQUAL = 'Equal'
INCOMPARABLE = 'Incomparable'


class Partition(tuple):
    """Weakly decreasing sequence of nonnegative integers

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare (and hash) equal.

    Parameters
    ----------
    parts : (iterable of int)
        box counts per row

    Examples
    --------
        lam = Partition((3, 1))
        lam.size()   # 4
        lam.add_box(1)   # Partition((3, 2))
    """

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        for part in parts:
            if part < 0:
                raise ValueError('Partition parts must be nonnegative.')
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError(''.join(('Partition parts must be weakly ',
                                          'decreasing: ', str(parts))))
        while parts and parts[-1] == 0:
            parts.pop()
        return super(Partition, cls).__new__(cls, parts)

    def __repr__(self):
        return 'Partition({})'.format(tuple(self))

    def size(self):
        """Number of boxes"""
        return sum(self)

    def length(self):
        """Number of nonzero rows"""
        return len(self)

    def part(self, i):
        """Row length of row i (0-indexed), zero beyond the last row"""
        return self[i] if i < len(self) else 0

    def padded(self, d):
        """Parts as a tuple of length d, padded with zeros

        Raises ValueError if the partition has more than d rows.
        """
        if len(self) > d:
            raise ValueError('Partition {} has more than {} rows.'.format(
                tuple(self), d))
        return tuple(self) + (0,) * (d - len(self))

    def can_add_box(self, i):
        """True if a box may be added to row i (0-indexed)"""
        return i == 0 or self.part(i - 1) > self.part(i)

    def add_box(self, i):
        """Partition lam + e_i (0-indexed row), ValueError if invalid"""
        if not self.can_add_box(i):
            raise ValueError('Cannot add a box to row {} of {}'.format(
                i, tuple(self)))
        parts = list(self.padded(max(len(self), i + 1)))
        parts[i] += 1
        return Partition(parts)

    def __add__(self, other):
        """Row-wise sum of two partitions"""
        size = max(len(self), len(other))
        return Partition(self.part(i) + other.part(i) for i in range(size))

    def boxes(self):
        """Cells (row, column), 0-indexed, in reading order"""
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def conjugate(self):
        """Transposed partition"""
        if not self:
            return Partition()
        return Partition(sum(1 for row in self if row > j)
                         for j in range(self[0]))

    def corners(self):
        """Rows (0-indexed) whose last box may be removed"""
        return [i for i in range(len(self))
                if self.part(i) > self.part(i + 1)]

    def remove_box(self, i):
        """Partition with the last box of row i removed"""
        if i not in self.corners():
            raise ValueError('Row {} of {} is not a corner'.format(
                i, tuple(self)))
        parts = list(self)
        parts[i] -= 1
        return Partition(parts)


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


def check_prob_vec(alpha, sorted_desc=False):
    """Validate a probability vector and return it as a tuple

    Parameters
    ----------
    alpha : (sequence of float or Fraction)
        candidate probability vector
    sorted_desc : (bool)
        if True, also require weakly decreasing entries (a sorted spectrum)
        (default=False)

    Returns
    -------
    alpha : (tuple)
        the validated entries, type preserved

    Raises
    ------
    ValueError
        entries outside [0, 1], sum not 1 within 1e-12, or unsorted
    """
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError('Probability vector must be nonempty.')
    exact = all(isinstance(a, (int, Fraction)) for a in alpha)
    tol = 0 if exact else PROB_TOL
    for entry in alpha:
        if entry < -tol or entry > 1 + tol:
            raise ValueError('Entries must lie in [0, 1]: {}'.format(alpha))
    if abs(sum(alpha) - 1) > tol:
        raise ValueError('Entries must sum to 1: {}'.format(alpha))
    if sorted_desc:
        for i in range(len(alpha) - 1):
            if alpha[i] < alpha[i + 1] - tol:
                raise ValueError('Spectrum must be sorted descending.')
    return alpha


def majorizes(x, y, tol=MAJ_TOL):
    """Majorization test x > y

    Parameters
    ----------
    x, y : (sequence of real)
        vectors of equal dimension; Fractions are compared exactly when
        tol is zero
    tol : (float)
        absolute tolerance on each prefix-sum comparison (default=1e-9)

    Returns
    -------
    bool
        True iff the descending prefix sums of x dominate those of y and
        the totals agree
    """
    if len(x) != len(y):
        raise ValueError('Dimension mismatch: {} vs {}'.format(len(x),
                                                                len(y)))
    xs = list(accumulate(sorted(x, reverse=True)))
    ys = list(accumulate(sorted(y, reverse=True)))
    if not xs:
        return True
    if abs(xs[-1] - ys[-1]) > tol:
        return False
    return all(a >= b - tol for a, b in zip(xs, ys))


def dominance_order(lam, mu):
    """Compare partitions of the same size in dominance order

    Returns one of 'GreaterEq', 'LessEq', 'Equal', 'Incomparable'
    describing lam relative to mu.
    """
    lam = _as_partition(lam)
    mu = _as_partition(mu)
    if lam.size() != mu.size():
        raise ValueError('Partitions must have equal size: {} vs {}'.format(
            lam.size(), mu.size()))
    if lam == mu:
        return EQUAL
    size = max(len(lam), len(mu))
    lam_sums = list(accumulate(lam.part(i) for i in range(size)))
    mu_sums = list(accumulate(mu.part(i) for i in range(size)))
    if all(a >= b for a, b in zip(lam_sums, mu_sums)):
        return GREATER_EQ
    if all(a <= b for a, b in zip(lam_sums, mu_sums)):
        return LESS_EQ
    return INCOMPARABLE


def dominates(mu, lam):
    """True if mu dominates lam (mu is GreaterEq or Equal)"""
    return dominance_order(mu, lam) in (GREATER_EQ, EQUAL)


def muirhead_chain(beta, alpha, tol=MAJ_TOL):
    """Chain of vectors from beta to alpha, two coordinates at a time

    Each step finds the first coordinate i with gamma_i > alpha_i and the
    first later coordinate k with gamma_k < alpha_k and moves
    min(gamma_i - alpha_i, alpha_k - gamma_k) of mass from i to k.

    Parameters
    ----------
    beta, alpha : (sequence of real)
        sorted probability vectors with beta majorizing alpha

    Returns
    -------
    chain : (list of tuple)
        gamma_0 = beta, ..., gamma_t = alpha, t <= d

    Raises
    ------
    ValueError
        if beta does not majorize alpha
    """
    beta = tuple(beta)
    alpha = tuple(alpha)
    if not majorizes(beta, alpha, tol):
        raise ValueError('{} does not majorize {}'.format(beta, alpha))
    exact = all(isinstance(a, (int, Fraction)) for a in beta + alpha)
    snap = 0 if exact else PROB_TOL
    gamma = list(beta)
    chain = [tuple(gamma)]
    d = len(gamma)
    for _ in range(d):
        excess = [i for i in range(d) if gamma[i] - alpha[i] > snap]
        if not excess:
            break
        i = excess[0]
        deficit = [k for k in range(i + 1, d) if alpha[k] - gamma[k] > snap]
        if not deficit:
            break
        k = deficit[0]
        delta = min(gamma[i] - alpha[i], alpha[k] - gamma[k])
        gamma[i] -= delta
        gamma[k] += delta
        for j in (i, k):
            if abs(gamma[j] - alpha[j]) <= snap:
                gamma[j] = alpha[j]
        chain.append(tuple(gamma))
    if chain[-1] != alpha:
        # remaining float dust below the snapping tolerance
        chain[-1] = alpha
    return chain


def partitions_of(n, max_length=None):
    """All partitions of n with at most max_length rows

    The order is lexicographically descending, e.g. (3), (2, 1), (1, 1, 1).
    """
    if n < 0:
        raise ValueError('n must be nonnegative')
    max_length = n if max_length is None else max_length
    out = []

    def extend(prefix, remaining, largest):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(prefix + [part], remaining - part, part)

    extend([], n, n)
    return out


def upper_partition(lam, m):
    """Partition (lam_1 - lam_{m+1}, ..., lam_m - lam_{m+1}) of height <= m"""
    lam = _as_partition(lam)
    if m < 1:
        raise ValueError('m must be a positive integer')
    floor = lam.part(m)
    return Partition(lam.part(i) - floor for i in range(m))


def lower_partition(lam, m):
    """Complementary partition with lam = upper_partition + lower_partition

    Rows 1..m all equal lam_{m+1}; rows beyond m are copied from lam.
    """
    lam = _as_partition(lam)
    if m < 1:
        raise ValueError('m must be a positive integer')
    floor = lam.part(m)
    return Partition([floor] * m + list(lam[m:]))
