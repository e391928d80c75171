# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
""" Tests RSK, its inverse, and the behead / curtail operations
"""

from itertools import product
import pytest
from schurweylpy.partitions import Partition
from schurweylpy import tableaux as tab


def all_words(n, d):
    """Every word of length n over 1..d"""
    return list(product(range(1, d + 1), repeat=n))


class TestRsk():
    """Test row insertion and reverse bumping"""

    def test_known_word(self):
        """Insertion of 1 3 2 2"""
        p_tab, q_tab = tab.rsk((1, 3, 2, 2))
        assert p_tab == ((1, 2, 2), (3,))
        assert q_tab == ((1, 2, 4), (3,))

    def test_decreasing_word(self):
        """A strictly decreasing word gives a single column"""
        p_tab, q_tab = tab.rsk((3, 2, 1))
        assert p_tab == ((1,), (2,), (3,))
        assert q_tab == ((1,), (2,), (3,))

    def test_equal_letters(self):
        """Equal letters fill a single row"""
        assert tab.sh_rsk((2, 2, 2)) == Partition((3,))

    def test_tableaux_valid(self):
        """P is semistandard, Q standard, of the same shape"""
        for word in all_words(5, 3):
            p_tab, q_tab = tab.rsk(word)
            assert tab.is_semistandard(p_tab)
            assert tab.is_standard(q_tab)
            assert tab.shape(p_tab) == tab.shape(q_tab)

    def test_inverse(self):
        """Reverse bumping recovers every word of length 5 over 3 letters"""
        for word in all_words(5, 3):
            assert tab.rsk_inverse(*tab.rsk(word)) == word

    def test_inverse_shape_mismatch(self):
        """P and Q must share a shape"""
        with pytest.raises(ValueError):
            tab.rsk_inverse(((1, 1),), ((1,), (2,)))

    def test_inverse_not_standard(self):
        """Q must be standard"""
        with pytest.raises(ValueError):
            tab.rsk_inverse(((1, 2),), ((2, 1),))

    def test_shapes_chain(self):
        """rsk_shapes grows by one box per letter and ends at sh_rsk"""
        word = (2, 1, 3, 1, 2)
        chain = tab.rsk_shapes(word)
        assert len(chain) == len(word) + 1
        assert chain[0] == Partition()
        for i, lam in enumerate(chain):
            assert lam.size() == i
        assert chain[-1] == tab.sh_rsk(word)

    def test_bad_letter(self):
        """Letters are positive integers"""
        with pytest.raises(ValueError):
            tab.rsk((1, 0))


class TestGreene():
    """Test shRSK against the independent Greene oracle"""

    def test_first_row_is_lis(self):
        """lam_1 equals the longest weakly increasing subsequence"""
        for word in all_words(6, 2):
            assert tab.sh_rsk(word).part(0) == tab.lis(word)

    def test_greene_sums(self):
        """sum_{i<=k} lam_i equals Greene's k-subsequence maximum"""
        for word in all_words(6, 3):
            lam = tab.sh_rsk(word)
            for k in (1, 2, 3):
                assert sum(lam[:k]) == tab.greene_oracle(word, k)

    def test_oracle_limit(self):
        """The oracle refuses long words"""
        with pytest.raises(ValueError):
            tab.greene_oracle((1,) * (tab.GREENE_MAX_N + 1), 1)


class TestBeheadCurtail():
    """Test the behead and curtail operations"""

    def test_curtail_commutes(self):
        """Q(curtail w) == curtail Q(w)"""
        for word in all_words(5, 3):
            assert (tab.recording_tableau(tab.curtail_word(word))
                    == tab.curtail_tableau(tab.recording_tableau(word)))

    def test_behead_commutes(self):
        """Q(behead w) == behead Q(w), by jeu de taquin"""
        for word in all_words(5, 3):
            assert (tab.recording_tableau(tab.behead_word(word))
                    == tab.behead_tableau(tab.recording_tableau(word)))

    def test_behead_example(self):
        """Jeu de taquin on a hook"""
        assert tab.behead_tableau(((1, 3), (2,))) == ((1, 2),)
        assert tab.behead_tableau(((1, 2, 4), (3,))) == ((1, 3), (2,))

    def test_empty(self):
        """Empty words and tableaux cannot be beheaded or curtailed"""
        with pytest.raises(ValueError):
            tab.behead_word(())
        with pytest.raises(ValueError):
            tab.curtail_word(())
        with pytest.raises(ValueError):
            tab.behead_tableau(())
        with pytest.raises(ValueError):
            tab.curtail_tableau(())


class TestDominance():
    """Test substring LIS dominance and its tableau version"""

    def test_tableau_matches_brute_force(self):
        """Recording tableaux decide substring LIS dominance"""
        words = all_words(5, 2)
        for w_prime, word in product(words, words):
            assert (tab.tableau_dominates(tab.recording_tableau(w_prime),
                                          tab.recording_tableau(word))
                    == tab.substring_lis_dominates(w_prime, word))

    def test_first_row_matches_prefixes(self):
        """First rows decide prefix LIS dominance"""
        words = all_words(5, 2)
        for w_prime, word in product(words, words):
            expected = all(tab.lis(w_prime[:j]) >= tab.lis(word[:j])
                           for j in range(1, 6))
            assert (tab.first_row_dominates(tab.recording_tableau(w_prime),
                                            tab.recording_tableau(word))
                    == expected)

    def test_reflexive(self):
        """Every word dominates itself"""
        word = (1, 2, 1, 2, 2)
        q_tab = tab.recording_tableau(word)
        assert tab.tableau_dominates(q_tab, q_tab)

    def test_size_mismatch(self):
        """Words must have equal length"""
        with pytest.raises(ValueError):
            tab.substring_lis_dominates((1, 2), (1,))
        with pytest.raises(ValueError):
            tab.tableau_dominates(((1,),), ((1, 2),))


class TestTableauHelpers():
    """Test standardness checks and JSON serialization"""

    def test_is_standard(self):
        """Standard tableaux hold 1..n increasing along rows and columns"""
        assert tab.is_standard(((1, 2), (3,)))
        assert not tab.is_standard(((1, 3), (2, 4), (5, 6, 7)))
        assert not tab.is_standard(((1, 1), (2,)))
        assert not tab.is_standard(((2, 3), (1,)))

    def test_json(self):
        """Tableaux serialize as lists of rows"""
        q_tab = ((1, 2, 4), (3,))
        text = tab.tableau_to_json(q_tab)
        assert text == '[[1, 2, 4], [3]]'
        assert tab.tableau_from_json(text) == q_tab
