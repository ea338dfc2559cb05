import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import all_dyck_words, all_permutations
from ulis.bijections import (
    DyckPath, InvalidDyckPath, PlaneTree, YoungTableau, ck_f, ck_f_inverse, dyck_to_tree,
    is_symmetric, max_depth_leaf_count, odd_columns, peaks, phi, phi_inverse, psi,
    rs_insert, rs_shape, tree_to_dyck, unique_max_peak,
)
from ulis.enumeration import avoiders
from ulis.lis import has_ulis, lis_length, rank_profile
from ulis.perm import PatternOccurrence, avoids, fixed_points, is_involution, is_sum_indecomposable
from ulis.trees import catalan

LEAF = PlaneTree()


def test_psi_small_cases():
    assert psi([]) == LEAF
    assert psi([2, 1]) == PlaneTree((LEAF, LEAF))
    assert psi([1, 2]) == PlaneTree((PlaneTree((LEAF,)),))
    assert str(psi([2, 1])) == "(()())"


def test_psi_rejects_132_with_witness():
    with pytest.raises(PatternOccurrence) as info:
        psi([2, 1, 4, 3])
    pos = info.value.positions
    assert len(pos) == 3 and list(pos) == sorted(pos)
    vals = [[2, 1, 4, 3][i - 1] for i in pos]
    assert vals[0] < vals[2] < vals[1]


def test_max_depth_leaf_count():
    assert max_depth_leaf_count(LEAF) == (0, 1)
    assert max_depth_leaf_count(PlaneTree((LEAF, LEAF))) == (1, 2)


@pytest.mark.parametrize("n", range(0, 10))
def test_psi_sizes_injectivity_and_leaf_law(n):
    seen = set()
    for p in avoiders((1, 3, 2), n):
        t = psi(p)
        assert t.size == n + 1
        assert max_depth_leaf_count(t)[1] == rank_profile(p).lis_count
        seen.add(t)
    assert len(seen) == catalan(n)


def test_phi_small_cases():
    assert phi([1]) == "UD"
    assert phi([2, 1]) == "UDUD"
    assert phi([1, 2]) == "UUDD"
    assert phi([]) == ""


def test_phi_inverse_rejects_bad_paths():
    with pytest.raises(InvalidDyckPath, match="below"):
        phi_inverse("DU")
    with pytest.raises(InvalidDyckPath, match="height"):
        phi_inverse("UUD")
    with pytest.raises(InvalidDyckPath):
        phi_inverse("UXD")


@pytest.mark.parametrize("n", range(0, 10))
def test_phi_round_trip_and_path_facts(n):
    images = set()
    for p in avoiders((1, 3, 2), n):
        d = phi(p)
        assert d.semilength == n
        assert phi_inverse(d) == p
        images.add(d)
        if n:
            prof = rank_profile(p)
            top = unique_max_peak(d)
            assert (top is not None) == (prof.lis_count == 1)
            if top is not None:
                assert top == prof.lis_length
        assert is_involution(p) == is_symmetric(d)
    assert sorted(images) == all_dyck_words(n)


def test_peaks():
    assert peaks("UUDD") == [(2, 2)] and unique_max_peak("UUDD") == 2
    assert peaks("UDUD") == [(1, 1), (3, 1)] and unique_max_peak("UDUD") is None
    assert unique_max_peak("") is None


def test_is_symmetric():
    assert is_symmetric("UUDD")
    assert not is_symmetric("UUDDUD")


def test_dyck_to_tree():
    assert dyck_to_tree("") == LEAF
    assert dyck_to_tree("UUDD") == PlaneTree((PlaneTree((LEAF,)),))
    assert dyck_to_tree("UDUD") == PlaneTree((LEAF, LEAF))


@pytest.mark.parametrize("s", range(0, 7))
def test_tree_dyck_round_trip(s):
    for w in all_dyck_words(s):
        t = dyck_to_tree(w)
        assert t.size == s + 1
        assert tree_to_dyck(t) == w
        assert PlaneTree.from_parens(t.to_parens()) == t


def test_dyck_path_type():
    d = DyckPath("UUDUDD")
    assert d.heights() == [1, 2, 1, 2, 1, 0]
    assert isinstance(d, str)


def test_ck_f_examples():
    assert ck_f([3, 5, 1, 2, 4, 7, 8, 6]) == (3, 5, 7, 1, 2, 4, 8, 9, 6)
    for n in range(1, 8):
        assert ck_f(range(1, n + 1)) == (n + 1, *range(1, n + 1))
    assert ck_f([1]) == (2, 1)
    assert ck_f_inverse([3, 5, 7, 1, 2, 4, 8, 9, 6]) == (3, 5, 1, 2, 4, 7, 8, 6)


def test_ck_f_errors():
    with pytest.raises(PatternOccurrence):
        ck_f([3, 2, 1])
    with pytest.raises(ValueError):
        ck_f([])
    with pytest.raises(ValueError, match="decomposable"):
        ck_f_inverse([1, 3, 2])
    with pytest.raises(ValueError):
        ck_f_inverse([1])


@pytest.mark.parametrize("n", range(1, 10))
def test_ck_f_is_a_bijection_onto_indecomposables(n):
    images = [ck_f(p) for p in avoiders((3, 2, 1), n)]
    assert len(set(images)) == len(images)
    target = {r for r in avoiders((3, 2, 1), n + 1) if is_sum_indecomposable(r)}
    assert set(images) == target
    for p, r in zip(avoiders((3, 2, 1), n), images):
        assert ck_f_inverse(r) == p


def _shape_mm(m):
    return [p for p in avoiders((3, 2, 1), 2 * m) if rs_shape(p) == (m, m)]


@pytest.mark.parametrize("m", range(1, 6))
def test_ck_f_on_rectangular_shapes(m):
    ps = _shape_mm(m)
    assert len(ps) == catalan(m) ** 2
    images = set()
    for p in ps:
        r = ck_f(p)
        rp, rr = rank_profile(p).ranks, rank_profile(r).ranks
        before = {v: rp[i] for i, v in enumerate(p)}
        after = {v: rr[i] for i, v in enumerate(r)}
        assert all(after[v] <= before[v] for v in p)
        assert has_ulis(r) and lis_length(r) == m + 1
        images.add(r)
    assert len(images) == len(ps)


def test_rs_examples():
    for n in range(0, 6):
        P, Q = rs_insert(range(1, n + 1))
        assert P == Q
        assert P.rows == ((tuple(range(1, n + 1)),) if n else ())
    P, Q = rs_insert([3, 2, 1])
    assert P.shape == Q.shape == (1, 1, 1)
    # hand insertion: 2 | 1 bumps 2 | 4 joins row 1 | 3 bumps 4 into row 2
    P, Q = rs_insert([2, 1, 4, 3])
    assert P.rows == ((1, 3), (2, 4)) and P == Q


def test_tableau_validation():
    with pytest.raises(ValueError):
        YoungTableau(((1, 2), (3, 4, 5)))
    with pytest.raises(ValueError):
        YoungTableau(((1, 3), (2, 2)))
    assert str(YoungTableau(((1, 3), (2, 4)))) == "1 3\n2 4"
    assert YoungTableau().shape == ()


def test_odd_columns():
    assert odd_columns(YoungTableau(((1, 2, 3, 4),))) == 4
    assert odd_columns(YoungTableau(((1, 3), (2, 4)))) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_rs_facts(n):
    for p in all_permutations(n):
        P, Q = rs_insert(p)
        assert P.shape == Q.shape
        assert sorted(itertools.chain(*P.rows)) == list(range(1, n + 1))
        assert (len(P.shape) <= 2) == avoids(p, (3, 2, 1))
        assert (P == Q) == is_involution(p)
        if is_involution(p):
            assert odd_columns(P) == fixed_points(p)
        if n and P.shape == (n // 2, n // 2):
            assert not has_ulis(p)


@pytest.mark.parametrize("n", range(0, 11))
def test_identity_is_the_only_321_involution_with_ulis(n):
    hits = [p for p in avoiders((3, 2, 1), n) if is_involution(p) and has_ulis(p)]
    assert hits == [tuple(range(1, n + 1))]


@pytest.mark.parametrize("n", range(1, 9))
def test_involution_ulis_consists_of_fixed_points(n):
    # checked on every involution, not only the pattern-avoiding ones
    from oracles import increasing_subsequences
    for p in all_permutations(n):
        if not is_involution(p) or not has_ulis(p):
            continue
        subs = increasing_subsequences(p)
        top = max(map(len, subs))
        (best,) = [s for s in subs if len(s) == top]
        assert all(p[v - 1] == v for v in best)


@given(st.integers(0, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_rs_shape_sums_to_n(p):
    assert sum(rs_shape(p)) == len(p)
