#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Dyck paths, hinged ranges and the raising bijection on two-row tableaux

A path is a tuple of steps, +1 (up) or -1 (down).  A Dyck path never passes
below its starting height; it need not return to it.  Step positions are
0-indexed and the height of a step is the height at its endpoint.

Classes
-------------------------------------------------------------------------------
HingedRange
    Ranges R_0..R_k separated by hinge steps s_1..s_k

Functions
-------------------------------------------------------------------------------
tableau_to_dyck(q_tab), dyck_to_tableau(path)
    Two-row standard tableaux as Dyck paths
behead_dyck(path), curtail_dyck(path)
    Path counterparts of beheading and curtailment
dyck_dominates(w_prime, path)
    Height comparison after every number of simultaneous beheadings
decompose_hinged(path, hinges)
    Split a path at hinge positions
dyck_f(path, s1), dyck_g(w_prime, s1_prime, lambda2)
    Raise / lower a chain of hinges
count_syt_eq(n, lambda2), count_syt_leq(n, lambda2)
    Number of two-row standard tableaux with lambda2 (at most lambda2)
    boxes in the second row
sample_syt_eq(n, lambda2, rng), sample_syt_leq(n, lambda2, rng)
    Uniform draws from the same families
iter_dyck_paths(n, downs=None)
    Enumerate Dyck paths of length n
-------------------------------------------------------------------------------
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
import logging

logger = logging.getLogger(__name__)

UP = 1
DOWN = -1
SAMPLE_MAX_N = 60


def _as_path(path):
    path = tuple(int(step) for step in path)
    if any(step not in (UP, DOWN) for step in path):
        raise ValueError('Steps must be +1 or -1.')
    return path


def heights(path, start=0):
    """Heights (start, h_1, ..., h_n) after each step"""
    return tuple(accumulate(path, initial=start))


def is_dyck(path):
    """True if the path never passes below its starting height"""
    return min(heights(_as_path(path))) >= 0


def _check_dyck(path):
    path = _as_path(path)
    if min(heights(path)) < 0:
        raise ValueError('Not a Dyck path: {}'.format(dyck_to_string(path)))
    return path


def height(path):
    """Final height, #up - #down"""
    return sum(path)


def step_height(path, index):
    """Height at the endpoint of step index"""
    return sum(path[:index + 1])


def downsteps(path):
    return sum(1 for step in path if step == DOWN)


def dyck_to_string(path):
    """U/D string, e.g. 'UUD'"""
    return ''.join('U' if step == UP else 'D' for step in path)


def dyck_from_string(text):
    """Inverse of dyck_to_string"""
    table = {'U': UP, 'D': DOWN}
    try:
        return tuple(table[char] for char in text.strip().upper())
    except KeyError:
        raise ValueError('Dyck strings use only U and D: {!r}'.format(text))


def tableau_to_dyck(q_tab):
    """Dyck path of a standard tableau with at most two rows

    Step t is up when t sits in the first row, down when in the second.

    Examples
    --------
        tableau_to_dyck(((1, 2), (3,)))   # (1, 1, -1)
    """
    if len(q_tab) > 2:
        raise ValueError('Only tableaux with at most two rows map to Dyck '
                         'paths.')
    size = sum(len(row) for row in q_tab)
    second = set(q_tab[1]) if len(q_tab) == 2 else set()
    entries = set(q_tab[0] if q_tab else ()) | second
    if entries != set(range(1, size + 1)):
        raise ValueError('Not a standard tableau: {}'.format(q_tab))
    path = tuple(DOWN if t in second else UP for t in range(1, size + 1))
    return _check_dyck(path)


def dyck_to_tableau(path):
    """Inverse of tableau_to_dyck"""
    path = _check_dyck(path)
    first = tuple(t for t, step in enumerate(path, start=1) if step == UP)
    second = tuple(t for t, step in enumerate(path, start=1) if step == DOWN)
    return tuple(row for row in (first, second) if row)


def curtail_dyck(path):
    """Delete the last step"""
    path = _check_dyck(path)
    if not path:
        raise ValueError('Cannot curtail an empty path.')
    return path[:-1]


def behead_dyck(path):
    """Delete the first step and move the origin to the new start

    If the path returned to height 0, its first return now ends at -1 and is
    raised.
    """
    path = _check_dyck(path)
    if not path:
        raise ValueError('Cannot behead an empty path.')
    rest = list(path[1:])
    level = 0
    for index, step in enumerate(rest):
        level += step
        if level < 0:
            rest[index] = UP
            break
    return tuple(rest)


def dyck_dominates(w_prime, path):
    """True if w_prime stays at least as high as path under every number of
    simultaneous beheadings"""
    w_prime = _check_dyck(w_prime)
    path = _check_dyck(path)
    if len(w_prime) != len(path):
        raise ValueError('Paths must have equal length.')
    while path:
        if any(a < b for a, b in zip(heights(w_prime), heights(path))):
            return False
        w_prime = behead_dyck(w_prime)
        path = behead_dyck(path)
    return True


@dataclass(frozen=True)
class HingedRange:
    """Ranges R_0..R_k (Dyck paths) separated by hinges s_1..s_k

    Internal ranges R_1..R_{k-1} end at their starting height; the external
    ranges R_0 and R_k may end higher.

    Parameters
    ----------
    ranges : (tuple of tuple)
        k + 1 Dyck paths, possibly empty
    hinges : (tuple of int)
        k steps
    """
    ranges: tuple
    hinges: tuple

    def __post_init__(self):
        if len(self.ranges) != len(self.hinges) + 1:
            raise ValueError('A hinged range needs one more range than '
                             'hinges.')
        for step in self.hinges:
            if step not in (UP, DOWN):
                raise ValueError('Hinges must be +1 or -1.')
        for index, part in enumerate(self.ranges):
            if not is_dyck(part):
                raise ValueError('Range {} is not a Dyck path.'.format(index))
            if 0 < index < len(self.hinges) and height(part) != 0:
                raise ValueError('Internal range {} is not complete.'.format(
                    index))

    @property
    def k(self):
        return len(self.hinges)

    def path(self):
        """Concatenation R_0 s_1 R_1 ... s_k R_k"""
        steps = list(self.ranges[0])
        for step, part in zip(self.hinges, self.ranges[1:]):
            steps.append(step)
            steps.extend(part)
        return tuple(steps)

    def hinge_positions(self):
        positions = []
        offset = len(self.ranges[0])
        for part in self.ranges[1:]:
            positions.append(offset)
            offset += 1 + len(part)
        return positions

    def raised(self):
        """Fully raised version (every hinge an upstep)"""
        return HingedRange(self.ranges, (UP,) * self.k)

    def lowered(self):
        """Fully lowered version (every hinge a downstep)"""
        return HingedRange(self.ranges, (DOWN,) * self.k)


def decompose_hinged(path, hinges):
    """Split path at the increasing step positions ``hinges``"""
    path = _as_path(path)
    hinges = list(hinges)
    if any(b <= a for a, b in zip(hinges, hinges[1:])):
        raise ValueError('Hinge positions must increase.')
    if hinges and not 0 <= hinges[0] <= hinges[-1] < len(path):
        raise ValueError('Hinge position out of range.')
    bounds = [-1] + hinges + [len(path)]
    ranges = tuple(path[a + 1:b] for a, b in zip(bounds, bounds[1:]))
    return HingedRange(ranges, tuple(path[i] for i in hinges))


def _down_chain(path, s1):
    """s_1 and each first later downstep one level below the previous"""
    chain = [s1]
    target = step_height(path, s1) - 1
    level = step_height(path, s1)
    for index in range(s1 + 1, len(path)):
        level += path[index]
        if path[index] == DOWN and level == target:
            chain.append(index)
            target -= 1
    return chain


def _up_chain(path, s1, k):
    """s'_1 and each last later upstep one level above the previous"""
    ends = heights(path)[1:]
    chain = [s1]
    for _ in range(k - 1):
        target = ends[chain[-1]] + 1
        later = [i for i in range(chain[-1] + 1, len(path))
                 if path[i] == UP and ends[i] == target]
        if not later:
            raise ValueError('No upstep of height {} after step {}'.format(
                target, chain[-1]))
        chain.append(later[-1])
    return chain


def _is_rightmost_up(path, index):
    ends = heights(path)[1:]
    return not any(path[i] == UP and ends[i] == ends[index]
                   for i in range(index + 1, len(path)))


def in_image(w_prime, s1_prime, lambda2):
    """True if (w_prime, s1_prime) lies in the image set of dyck_f

    w_prime has lambda2 - k downsteps for some 1 <= k <= lambda2, step
    s1_prime is an upstep that is the rightmost of its height, and
    k + 1 <= ht(s1_prime) <= ht(w_prime) - k + 1.
    """
    w_prime = _as_path(w_prime)
    if not is_dyck(w_prime) or not 0 <= s1_prime < len(w_prime):
        return False
    if lambda2 > len(w_prime) // 2:
        return False
    k = lambda2 - downsteps(w_prime)
    if not 1 <= k <= lambda2 or w_prime[s1_prime] != UP:
        return False
    level = step_height(w_prime, s1_prime)
    if not k + 1 <= level <= height(w_prime) - k + 1:
        return False
    return _is_rightmost_up(w_prime, s1_prime)


def dyck_f(path, s1):
    """Raise the downstep chain starting at s1

    Parameters
    ----------
    path : (tuple of int)
        Dyck path with at least one downstep
    s1 : (int)
        position of a downstep

    Returns
    -------
    w_prime : (tuple of int)
        Dyck path with k fewer downsteps
    s1_prime : (int)
        position of the raised s1, an upstep

    Examples
    --------
        dyck_f((1, -1), 1)   # ((1, 1), 1)
    """
    path = _check_dyck(path)
    if not 0 <= s1 < len(path) or path[s1] != DOWN:
        raise ValueError('Step {} is not a downstep of {}'.format(
            s1, dyck_to_string(path)))
    chain = _down_chain(path, s1)
    w_prime = decompose_hinged(path, chain).raised().path()
    lambda2 = downsteps(path)
    if not in_image(w_prime, s1, lambda2):
        raise AssertionError('dyck_f produced ({}, {}) outside the image '
                             'set'.format(dyck_to_string(w_prime), s1))
    return w_prime, s1


def dyck_g(w_prime, s1_prime, lambda2):
    """Inverse of dyck_f

    Parameters
    ----------
    w_prime : (tuple of int)
        Dyck path with lambda2 - k downsteps, 1 <= k <= lambda2
    s1_prime : (int)
        position of an upstep, rightmost of its height
    lambda2 : (int)
        number of downsteps of the preimage

    Returns
    -------
    (path, s1) : (tuple of int, int)

    Raises
    ------
    ValueError
        if (w_prime, s1_prime) is not in the image set for lambda2
    """
    w_prime = _check_dyck(w_prime)
    if not in_image(w_prime, s1_prime, lambda2):
        raise ValueError('({}, {}) is not in the image set for '
                         'lambda2={}'.format(dyck_to_string(w_prime),
                                             s1_prime, lambda2))
    k = lambda2 - downsteps(w_prime)
    chain = _up_chain(w_prime, s1_prime, k)
    path = decompose_hinged(w_prime, chain).lowered().path()
    return _check_dyck(path), s1_prime


def iter_dyck_paths(n, downs=None):
    """Generate Dyck paths of length n, optionally with exactly downs
    downsteps; paths taking an up step sort first"""
    def extend(prefix, level, used):
        if len(prefix) == n:
            if downs is None or used == downs:
                yield tuple(prefix)
            return
        if downs is None or downs - used <= n - len(prefix) - 1:
            prefix.append(UP)
            yield from extend(prefix, level + 1, used)
            prefix.pop()
        if level > 0 and (downs is None or used < downs):
            prefix.append(DOWN)
            yield from extend(prefix, level - 1, used + 1)
            prefix.pop()

    yield from extend([], 0, 0)


@lru_cache(maxsize=None)
def _completions(length, level, downs, exact):
    """Dyck continuations of a given length from level using exactly (or at
    most) downs downsteps"""
    if length == 0:
        return 1 if (downs == 0 or not exact) else 0
    total = _completions(length - 1, level + 1, downs, exact)
    if level > 0 and downs > 0:
        total += _completions(length - 1, level - 1, downs - 1, exact)
    return total


def _check_family(n, lambda2):
    if n < 0 or not 0 <= lambda2 <= n // 2:
        raise ValueError('Need 0 <= lambda2 <= n // 2, got n={}, '
                         'lambda2={}'.format(n, lambda2))


def count_syt_eq(n, lambda2):
    """Number of standard tableaux of shape (n - lambda2, lambda2)"""
    _check_family(n, lambda2)
    return _completions(n, 0, lambda2, True)


def count_syt_leq(n, lambda2):
    """Number of two-row standard tableaux of size n with second row at most
    lambda2"""
    _check_family(n, lambda2)
    return _completions(n, 0, lambda2, False)


def _sample_path(n, lambda2, exact, rng):
    _check_family(n, lambda2)
    if n > SAMPLE_MAX_N:
        raise ValueError('Sampling is limited to n <= {}'.format(
            SAMPLE_MAX_N))
    path = []
    level, downs = 0, lambda2
    for remaining in range(n, 0, -1):
        up = _completions(remaining - 1, level + 1, downs, exact)
        down = (_completions(remaining - 1, level - 1, downs - 1, exact)
                if level > 0 and downs > 0 else 0)
        if int(rng.integers(up + down)) < up:
            path.append(UP)
            level += 1
        else:
            path.append(DOWN)
            level -= 1
            downs -= 1
    return tuple(path)


def sample_syt_eq(n, lambda2, rng):
    """Uniform standard tableau of shape (n - lambda2, lambda2)

    Steps are drawn one at a time with probability proportional to the
    number of completions.
    """
    return dyck_to_tableau(_sample_path(n, lambda2, True, rng))


def sample_syt_leq(n, lambda2, rng):
    """Uniform two-row standard tableau of size n, second row <= lambda2"""
    return dyck_to_tableau(_sample_path(n, lambda2, False, rng))
