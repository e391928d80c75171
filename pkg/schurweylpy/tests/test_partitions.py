# -*- coding: utf-8 -*-
# Copyright (C) 2026, schurweylpy developers
# Full license can be found in License.md
# -----------------------------------------------------------------------------
""" Tests partitions, majorization and Muirhead chains
"""

from fractions import Fraction
import pytest
from schurweylpy.partitions import (Partition, check_prob_vec, dominance_order,
                                    dominates, lower_partition, majorizes,
                                    muirhead_chain, partitions_of,
                                    upper_partition)


class TestPartition():
    """Test the Partition type"""

    def test_trailing_zeros_dropped(self):
        """Trailing zero rows do not change equality or hash"""
        assert Partition((2, 1, 0)) == Partition((2, 1))
        assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))

    def test_increasing_parts_rejected(self):
        """Parts must be weakly decreasing"""
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_negative_part_rejected(self):
        """Parts must be nonnegative"""
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_padded(self):
        """padded appends zeros and refuses to truncate"""
        assert Partition((3, 1)).padded(3) == (3, 1, 0)
        with pytest.raises(ValueError):
            Partition((3, 1, 1)).padded(2)

    def test_add_box(self):
        """Boxes may only be added where the result is a partition"""
        lam = Partition((2, 2))
        assert lam.add_box(0) == Partition((3, 2))
        assert lam.add_box(2) == Partition((2, 2, 1))
        with pytest.raises(ValueError):
            lam.add_box(1)

    def test_corners_and_remove(self):
        """Corners are the removable rows"""
        lam = Partition((3, 1, 1))
        assert lam.corners() == [0, 2]
        assert lam.remove_box(2) == Partition((3, 1))
        with pytest.raises(ValueError):
            lam.remove_box(1)

    def test_conjugate(self):
        """Conjugation transposes and is an involution"""
        lam = Partition((4, 2, 1))
        assert lam.conjugate() == Partition((3, 2, 1, 1))
        assert lam.conjugate().conjugate() == lam

    def test_size_and_part(self):
        """size counts boxes and part is zero beyond the last row"""
        lam = Partition((3, 1))
        assert lam.size() == 4
        assert lam.part(5) == 0


class TestProbVec():
    """Test validation of probability vectors"""

    def test_exact_vector(self):
        """Fractions summing to one are accepted unchanged"""
        alpha = (Fraction(3, 5), Fraction(2, 5))
        assert check_prob_vec(alpha, sorted_desc=True) == alpha

    def test_bad_sum(self):
        """Entries must sum to one"""
        with pytest.raises(ValueError):
            check_prob_vec((0.5, 0.4))

    def test_unsorted(self):
        """A spectrum must be sorted when asked"""
        assert check_prob_vec((0.4, 0.6)) == (0.4, 0.6)
        with pytest.raises(ValueError):
            check_prob_vec((0.4, 0.6), sorted_desc=True)

    def test_empty(self):
        """An empty vector is rejected"""
        with pytest.raises(ValueError):
            check_prob_vec(())


class TestDominance():
    """Test majorization and dominance order"""

    def test_majorizes(self):
        """Point mass majorizes everything, uniform is majorized"""
        assert majorizes((1.0, 0.0, 0.0), (0.5, 0.3, 0.2))
        assert majorizes((0.5, 0.3, 0.2), (1 / 3, 1 / 3, 1 / 3))
        assert not majorizes((0.5, 0.3, 0.2), (0.6, 0.2, 0.2))

    def test_majorizes_dimension_mismatch(self):
        """Vectors of different length cannot be compared"""
        with pytest.raises(ValueError):
            majorizes((1.0,), (0.5, 0.5))

    def test_dominance_order(self):
        """All four outcomes occur"""
        assert dominance_order((3, 1), (2, 2)) == 'GreaterEq'
        assert dominance_order((2, 2), (3, 1)) == 'LessEq'
        assert dominance_order((2, 1), (2, 1)) == 'Equal'
        assert dominance_order((3, 1, 1, 1), (2, 2, 2)) == 'Incomparable'

    def test_dominates(self):
        """dominates is GreaterEq or Equal"""
        assert dominates((3, 1), (2, 2))
        assert dominates((2, 2), (2, 2))
        assert not dominates((2, 2), (3, 1))

    def test_size_mismatch(self):
        """Dominance needs partitions of the same size"""
        with pytest.raises(ValueError):
            dominance_order((3,), (2,))


class TestMuirheadChain():
    """Test the two-coordinate transfer chain"""

    def test_exact_chain(self):
        """Each step moves mass between two coordinates, ends at alpha"""
        beta = (Fraction(7, 10), Fraction(2, 10), Fraction(1, 10))
        alpha = (Fraction(1, 2), Fraction(3, 10), Fraction(2, 10))
        chain = muirhead_chain(beta, alpha)
        assert chain[0] == beta
        assert chain[-1] == alpha
        assert len(chain) - 1 <= len(alpha)
        for first, second in zip(chain[:-1], chain[1:]):
            moved = [i for i in range(3) if first[i] != second[i]]
            assert len(moved) == 2
            assert majorizes(first, second, tol=0)
            assert sum(second) == 1

    def test_identical(self):
        """A vector reaches itself in zero steps"""
        alpha = (0.5, 0.5)
        assert muirhead_chain(alpha, alpha) == [alpha]

    def test_not_majorizing(self):
        """beta must majorize alpha"""
        with pytest.raises(ValueError):
            muirhead_chain((0.5, 0.5), (0.8, 0.2))


class TestPartitionsOf():
    """Test enumeration of partitions"""

    def test_counts(self):
        """Partition numbers p(n) for small n"""
        assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5,
                                                             7, 11, 15]

    def test_order_and_length(self):
        """Descending lexicographic order with a row limit"""
        assert partitions_of(4, 2) == [Partition((4,)), Partition((3, 1)),
                                       Partition((2, 2))]


class TestUpperLower():
    """Test splitting a partition at row m"""

    def test_split_sums(self):
        """upper + lower recovers lam"""
        lam = Partition((5, 3, 2, 1))
        for m in range(1, 5):
            assert upper_partition(lam, m) + lower_partition(lam, m) == lam

    def test_upper(self):
        """upper_partition subtracts lam_{m+1} from the top m rows"""
        assert upper_partition((5, 3, 2, 1), 2) == Partition((3, 1))
        assert lower_partition((5, 3, 2, 1), 2) == Partition((2, 2, 2, 1))

    def test_bad_m(self):
        """m must be positive"""
        with pytest.raises(ValueError):
            upper_partition((2, 1), 0)
