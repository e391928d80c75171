#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
"""Words, Young tableaux and the RSK correspondence

Words are tuples of letters from 1..d.  Tableaux are tuples of rows, each row
a tuple of positive integers, so that both are hashable and immutable.

Functions
-------------------------------------------------------------------------------
rsk(word)
    Row insertion; returns the insertion and recording tableaux
rsk_inverse(p_tab, q_tab)
    Reverse bumping; recovers the word
sh_rsk(word)
    Common shape of the RSK tableaux
lis(word)
    Length of the longest weakly increasing subsequence
greene_oracle(word, k)
    Longest disjoint union of k weakly increasing subsequences (testing only)
behead_word(word), curtail_word(word)
    Drop the first / last letter
behead_tableau(q_tab), curtail_tableau(q_tab)
    Tableau counterparts (jeu de taquin / remove the largest entry)
substring_lis_dominates(w_prime, word)
    Brute-force substring LIS comparison (testing only)
tableau_dominates(q_prime, q_tab)
    The same relation read off recording tableaux
first_row_dominates(q_prime, q_tab)
    Entrywise comparison of first rows (prefix LIS comparison)
-------------------------------------------------------------------------------
"""
from bisect import bisect_left, bisect_right
import json

from schurweylpy.partitions import Partition

GREENE_MAX_N = 14
SUBSTRING_MAX_N = 12


def _as_word(word):
    word = tuple(int(letter) for letter in word)
    for letter in word:
        if letter < 1:
            raise ValueError('Letters must be positive integers.')
    return word


def shape(tab):
    """Shape of a tableau as a Partition"""
    return Partition(len(row) for row in tab)


def tableau_size(tab):
    """Number of boxes in a tableau"""
    return sum(len(row) for row in tab)


def _freeze(rows):
    return tuple(tuple(row) for row in rows if len(row) > 0)


def is_semistandard(tab):
    """True if rows weakly increase, columns strictly increase"""
    try:
        shape(tab)
    except ValueError:
        return False
    for row in tab:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if any(a < 1 for a in row):
            return False
    for upper, lower in zip(tab, tab[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def is_standard(tab):
    """True if the tableau is standard with entries exactly 1..n"""
    entries = sorted(x for row in tab for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    if not is_semistandard(tab):
        return False
    return all(a < b for row in tab for a, b in zip(row, row[1:]))


def _check_standard(tab):
    if not is_standard(tab):
        raise ValueError('Not a standard Young tableau: {}'.format(tab))


def rsk(word):
    """Robinson-Schensted-Knuth row insertion

    Each letter bumps the first entry strictly greater than itself, so equal
    letters are ordered by position.

    Parameters
    ----------
    word : (sequence of int)
        letters from 1..d

    Returns
    -------
    p_tab : (tuple of tuple)
        semistandard insertion tableau
    q_tab : (tuple of tuple)
        standard recording tableau of the same shape

    Examples
    --------
        rsk((2, 1))   # (((1,), (2,)), ((1,), (2,)))
    """
    p_rows = []
    q_rows = []
    for step, letter in enumerate(_as_word(word), start=1):
        row = _insert(p_rows, letter)
        if row == len(q_rows):
            q_rows.append([])
        q_rows[row].append(step)
    return _freeze(p_rows), _freeze(q_rows)


def _insert(p_rows, letter):
    """Row-insert letter into p_rows in place, return the row that grew"""
    for r, row in enumerate(p_rows):
        pos = bisect_right(row, letter)
        if pos == len(row):
            row.append(letter)
            return r
        row[pos], letter = letter, row[pos]
    p_rows.append([letter])
    return len(p_rows) - 1


def rsk_shapes(word):
    """Shapes of the RSK insertion tableau after each letter

    Returns the growth chain [(), sh(w[1..1]), ..., sh(w)].
    """
    p_rows = []
    lengths = []
    chain = [Partition()]
    for letter in _as_word(word):
        row = _insert(p_rows, letter)
        if row == len(lengths):
            lengths.append(0)
        lengths[row] += 1
        chain.append(Partition(lengths))
    return chain


def rsk_inverse(p_tab, q_tab):
    """Inverse RSK by reverse bumping

    Parameters
    ----------
    p_tab : (tuple of tuple)
        semistandard insertion tableau
    q_tab : (tuple of tuple)
        standard recording tableau of the same shape

    Returns
    -------
    word : (tuple of int)

    Raises
    ------
    ValueError
        if the shapes differ or either tableau is invalid
    """
    if not is_semistandard(p_tab):
        raise ValueError('Not a semistandard tableau: {}'.format(p_tab))
    _check_standard(q_tab)
    if shape(p_tab) != shape(q_tab):
        raise ValueError('Shape mismatch: {} vs {}'.format(shape(p_tab),
                                                           shape(q_tab)))
    p_rows = [list(row) for row in p_tab]
    position = {}
    for r, row in enumerate(q_tab):
        for entry in row:
            position[entry] = r
    letters = []
    for step in range(tableau_size(q_tab), 0, -1):
        r = position[step]
        letter = p_rows[r].pop()
        for upper in range(r - 1, -1, -1):
            row = p_rows[upper]
            pos = bisect_left(row, letter) - 1
            row[pos], letter = letter, row[pos]
        letters.append(letter)
    return tuple(reversed(letters))


def sh_rsk(word):
    """Shape of the RSK tableaux of word"""
    return shape(rsk(word)[1])


def recording_tableau(word):
    """Recording tableau Q of word"""
    return rsk(word)[1]


def lis(word):
    """Length of the longest weakly increasing subsequence"""
    tails = []
    for letter in word:
        pos = bisect_right(tails, letter)
        if pos == len(tails):
            tails.append(letter)
        else:
            tails[pos] = letter
    return len(tails)


def greene_oracle(word, k):
    """Longest disjoint union of k weakly increasing subsequences

    Searches every assignment of letters to k subsequences (or to none),
    merging assignments that leave the same multiset of subsequence tails.
    Independent of RSK; for cross-checking only.

    Parameters
    ----------
    word : (sequence of int)
        at most 14 letters
    k : (int)
        number of subsequences, k >= 1

    Returns
    -------
    int
    """
    word = _as_word(word)
    if len(word) > GREENE_MAX_N:
        raise ValueError('greene_oracle is limited to {} letters'.format(
            GREENE_MAX_N))
    if k < 1:
        raise ValueError('k must be at least 1')
    k = min(k, max(len(word), 1))
    # state: sorted tails of the k subsequences (0 = empty) -> best length
    states = {(0,) * k: 0}
    for letter in word:
        updated = dict(states)
        for tails, total in states.items():
            seen = set()
            for i, tail in enumerate(tails):
                if tail <= letter and tail not in seen:
                    seen.add(tail)
                    new_tails = list(tails)
                    new_tails[i] = letter
                    key = tuple(sorted(new_tails))
                    if updated.get(key, -1) < total + 1:
                        updated[key] = total + 1
        states = updated
    return max(states.values())


def behead_word(word):
    """Drop the first letter"""
    if len(word) == 0:
        raise ValueError('Cannot behead an empty word.')
    return tuple(word[1:])


def curtail_word(word):
    """Drop the last letter"""
    if len(word) == 0:
        raise ValueError('Cannot curtail an empty word.')
    return tuple(word[:-1])


def curtail_tableau(q_tab):
    """Remove the box holding the largest entry of a standard tableau"""
    if tableau_size(q_tab) == 0:
        raise ValueError('Cannot curtail an empty tableau.')
    largest = tableau_size(q_tab)
    return _freeze([x for x in row if x != largest] for row in q_tab)


def behead_tableau(q_tab):
    """Delete the entry 1 and slide the hole out by jeu de taquin

    The hole at the top-left corner repeatedly swaps with the smaller of its
    right and lower neighbours until it has neither; the vacated cell is
    dropped and every entry is decreased by 1.
    """
    if tableau_size(q_tab) == 0:
        raise ValueError('Cannot behead an empty tableau.')
    rows = [list(row) for row in q_tab]
    r, c = 0, 0
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = (rows[r + 1][c]
                 if r + 1 < len(rows) and c < len(rows[r + 1]) else None)
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = below
            r += 1
    del rows[r][c]
    return _freeze([x - 1 for x in row] for row in rows)


def substring_lis_dominates(w_prime, word):
    """True if every substring of w_prime has LIS at least that of word

    Brute force over all O(n^2) substrings; limited to 12 letters.
    """
    if len(w_prime) != len(word):
        raise ValueError('Words must have equal length.')
    n = len(word)
    if n > SUBSTRING_MAX_N:
        raise ValueError('substring_lis_dominates is limited to {} '
                         'letters'.format(SUBSTRING_MAX_N))
    return all(lis(w_prime[i:j]) >= lis(word[i:j])
               for i in range(n) for j in range(i + 1, n + 1))


def tableau_dominates(q_prime, q_tab):
    """Substring-LIS dominance computed from recording tableaux

    The first rows are compared, then the check recurses on the beheaded
    pair and on the curtailed pair.  Results are memoized per call.
    """
    if tableau_size(q_prime) != tableau_size(q_tab):
        raise ValueError('Tableaux must have equal size.')
    memo = {}

    def check(a, b):
        if not b:
            return True
        key = (a, b)
        if key not in memo:
            if len(a[0]) < len(b[0]):
                memo[key] = False
            else:
                memo[key] = (check(behead_tableau(a), behead_tableau(b))
                             and check(curtail_tableau(a),
                                       curtail_tableau(b)))
        return memo[key]

    return check(_freeze(q_prime), _freeze(q_tab))


def first_row_dominates(q_prime, q_tab):
    """Check q_prime[0][j] <= q_tab[0][j] for all j (missing entries infinite)

    Equivalent to LIS(w'[1..j]) >= LIS(w[1..j]) for every prefix length j.
    """
    if tableau_size(q_prime) != tableau_size(q_tab):
        raise ValueError('Tableaux must have equal size.')
    top_prime = q_prime[0] if q_prime else ()
    top = q_tab[0] if q_tab else ()
    if len(top_prime) < len(top):
        return False
    return all(a <= b for a, b in zip(top_prime, top))


def tableau_to_json(tab):
    """Serialize a tableau as a JSON list of rows"""
    return json.dumps([list(row) for row in tab])


def tableau_from_json(text):
    """Inverse of tableau_to_json"""
    return _freeze(json.loads(text))
