from fractions import Fraction

import pytest

from oracles import all_dyck_words, tree_depths_of_leaves
from ulis.enumeration import count_involution_avoiders, count_ulis_avoiders
from ulis.trees import (
    TreeCountDP, binomial, catalan, count_unique_deepest_leaf_trees, ratio_flags,
    ratio_report, u132_fast,
)


def brute_unique(n):
    total = 0
    for w in all_dyck_words(n - 1):
        depths = tree_depths_of_leaves(w)
        total += depths.count(max(depths)) == 1
    return total


def test_catalan_and_binomial():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert binomial(6, 3) == 20
    with pytest.raises(ValueError):
        binomial(3, 4)


@pytest.mark.parametrize("n", range(0, 13))
def test_central_binomial_counts_132_involutions(n):
    assert count_involution_avoiders((1, 3, 2), n) == binomial(n, n // 2)


def test_unique_deepest_leaf_examples():
    assert count_unique_deepest_leaf_trees(1) == 1
    assert count_unique_deepest_leaf_trees(4) == 3
    assert count_unique_deepest_leaf_trees(10) == 2566
    with pytest.raises(ValueError):
        count_unique_deepest_leaf_trees(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_dp_matches_tree_enumeration(n):
    assert count_unique_deepest_leaf_trees(n) == brute_unique(n)


def test_u132_fast():
    assert [u132_fast(n) for n in range(1, 10)] == [1, 1, 3, 8, 23, 71, 229, 759, 2566]
    assert u132_fast(0) == 1


@pytest.mark.parametrize("n", range(0, 12))
def test_u132_fast_matches_brute(n):
    assert u132_fast(n) == count_ulis_avoiders((1, 3, 2), n)


def test_table_consistency():
    dp = TreeCountDP(20)
    for n in range(2, 15):
        for h in range(0, 15):
            assert dp.trees(n, h) == dp.forests(n - 1, h - 1)
    for n in range(1, 15):
        assert dp.trees(n, n - 1) == catalan(n - 1)
        assert sum(dp.unique(n, h) for h in range(n)) <= catalan(n - 1)
    assert dp.side_forests(0, -1) == 1 and dp.side_forests(2, -1) == 0
    # stars: unique deepest leaf at height 1 only for the single edge
    assert [dp.unique(n, 1) for n in range(1, 6)] == [0, 1, 0, 0, 0]


def test_ratio_report():
    rows = ratio_report(30)
    assert rows[0].ratio == 1
    assert rows[2].ratio == Fraction(3, 5)
    assert 0.5 < rows[29].value < 0.6
    assert ratio_flags(rows) == []


def test_ratio_facts_on_brute_range():
    rows = ratio_report(11)
    brute = [Fraction(count_ulis_avoiders((1, 3, 2), n), catalan(n)) for n in range(1, 12)]
    assert [r.ratio for r in rows] == brute
    tail = [r.ratio for r in rows if r.n >= 3]
    assert all(a > b for a, b in zip(tail, tail[1:]))
    assert all(r >= Fraction(1, 2) for r in tail)


def test_ratio_flags_detects_increase():
    from ulis.trees import RatioRow
    rows = [RatioRow(3, Fraction(3, 5), 0.6), RatioRow(4, Fraction(2, 3), 2 / 3), RatioRow(5, Fraction(1, 2), 0.5)]
    assert ratio_flags(rows) == [(4, "not decreasing"), (5, "at or below 1/2")]
