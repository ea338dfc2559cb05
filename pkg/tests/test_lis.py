import pytest
from hypothesis import given, strategies as st

from oracles import all_permutations, lis_count_by_subsets
from ulis.bijections import rs_insert
from ulis.lis import has_ulis, lis_count, lis_length, rank_classes, rank_profile
from ulis.perm import (
    avoids, direct_sum, inverse, left_to_right_maxima, reverse_complement, right_to_left_minima,
)


def perms(lo, hi):
    return st.integers(lo, hi).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_rank_profile_examples():
    assert rank_profile([3, 5, 1, 6, 2, 4]).ranks == (1, 2, 1, 3, 2, 3)
    prof = rank_profile([2, 3, 1, 4])
    assert (prof.lis_length, prof.lis_count) == (3, 1)
    prof = rank_profile([2, 4, 6, 1, 3, 5])
    assert (prof.lis_length, prof.lis_count) == (3, 4)


def test_empty_permutation_conventions():
    prof = rank_profile([])
    assert (prof.lis_length, prof.lis_count) == (0, 1)
    assert has_ulis([])


def test_has_ulis_examples():
    assert has_ulis([2, 3, 1, 4])
    assert not has_ulis([2, 4, 6, 1, 3, 5])


def test_rank_classes_examples():
    p = [3, 5, 1, 6, 2, 4]
    assert [[p[i - 1] for i in c] for c in rank_classes(p)] == [[3, 1], [5, 2], [6, 4]]
    assert rank_classes([1, 2, 3]) == [[1], [2], [3]]
    assert rank_classes([2, 1]) == [[1, 2]]


@pytest.mark.parametrize("n", range(0, 10))
def test_count_matches_subset_oracle(n):
    perms_ = all_permutations(n) if n <= 7 else _sample(n)
    for p in perms_:
        assert (lis_length(p), lis_count(p)) == lis_count_by_subsets(p)


def _sample(n, k=300):
    import random
    rng = random.Random(n)
    for _ in range(k):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        yield tuple(p)


@pytest.mark.parametrize("n", range(0, 9))
def test_ulis_is_symmetric(n):
    for p in all_permutations(n):
        u = has_ulis(p)
        assert u == has_ulis(inverse(p)) == has_ulis(reverse_complement(p))


@given(perms(1, 6), perms(1, 6))
def test_direct_sum_law(p, r):
    a, b, s = rank_profile(p), rank_profile(r), rank_profile(direct_sum(p, r))
    assert s.lis_length == a.lis_length + b.lis_length
    assert s.lis_count == a.lis_count * b.lis_count
    assert has_ulis(direct_sum(p, r)) == (has_ulis(p) and has_ulis(r))


@pytest.mark.parametrize("n", range(1, 10))
def test_rank_classes_of_321_avoiders(n):
    from ulis.enumeration import avoiders
    for p in avoiders((3, 2, 1), n):
        lr, rl = set(left_to_right_maxima(p)), set(right_to_left_minima(p))
        for cls in rank_classes(p):
            assert len(cls) <= 2
            if len(cls) == 2:
                assert cls[0] in lr and cls[1] in rl


@given(perms(0, 9))
def test_first_row_is_lis_length(p):
    P, _ = rs_insert(p)
    assert (P.shape[0] if P.shape else 0) == lis_length(p)


def test_counts_do_not_saturate():
    # 2^k maximal subsequences from k stacked descents of length 2
    p = []
    for b in range(40):
        p.extend([2 * b + 2, 2 * b + 1])
    assert lis_count(p) == 2 ** 40
    assert avoids(p, (3, 2, 1))
