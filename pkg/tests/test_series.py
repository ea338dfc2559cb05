from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ulis.enumeration import CountTable, count_ulis_avoiders
from ulis.series import (
    U231_RADICAND, PowerSeries, closed_form_u231, find_real_root, growth_profile,
    indecomposable_from_total, ps_add, ps_div, ps_mul, ps_sqrt, ps_sub, solve_u231,
)

# Taylor coefficients of sqrt(1 - 4z + 2z^2 + z^4) and of the closed form,
# frozen from an independent symbolic expansion.
SQRT_RADICAND = [1, -2, -1, -2, -4, -10, -26, -70, -194, -550, -1588, -4654, -13810]
U231 = [1, 1, 1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, 20705, 62642, 190987,
        586219, 1810011, 5617914, 17518463, 54857506, 172431935]


def test_ring_operations():
    z = PowerSeries.z(5)
    assert ps_mul(1 + z, 1 - z) == PowerSeries([1, 0, -1], 5)
    assert ps_div(PowerSeries.constant(1, 8), 1 - PowerSeries.z(8)).coefficients == (1,) * 9
    a = PowerSeries([1, -4, 2], 10)
    assert a * (1 / a) == PowerSeries.constant(1, 10)
    assert ps_add(z, z) == 2 * z
    assert ps_sub(z, z) == PowerSeries([], 5)


def test_order_rules():
    a = PowerSeries([1, 2, 3], 5)
    b = PowerSeries([1, 1], 2)
    assert (a + b).order == 2
    with pytest.raises(IndexError):
        b[3]
    with pytest.raises(ZeroDivisionError):
        a / PowerSeries.z(4)


def test_sqrt_examples():
    assert ps_sqrt(PowerSeries.constant(1, 5)) == PowerSeries.constant(1, 5)
    z = PowerSeries.z(6)
    assert ps_sqrt((1 + z) * (1 + z)) == 1 + z
    s = ps_sqrt(PowerSeries(U231_RADICAND, 12))
    assert s.integer_coefficients() == SQRT_RADICAND
    with pytest.raises(ValueError):
        ps_sqrt(PowerSeries([4, 1], 3))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=20, max_size=20))
def test_sqrt_squares_back(tail):
    a = PowerSeries([1, *tail], 20)
    s = ps_sqrt(a)
    assert s * s == a


def test_u231_by_equation_and_closed_form():
    assert solve_u231(20).integer_coefficients() == U231
    assert closed_form_u231(20).integer_coefficients() == U231
    assert solve_u231(0).integer_coefficients() == [1]
    big = PowerSeries([1, 0, 1], 5) - ps_sqrt(PowerSeries(U231_RADICAND, 5))
    assert big[0] == 0


def test_u231_matches_brute_force():
    u = solve_u231(11)
    assert [u[n] for n in range(12)] == [count_ulis_avoiders((2, 3, 1), n) for n in range(12)]


def test_functional_equation_residual_vanishes():
    u = solve_u231(40)
    z = PowerSeries.z(40)
    assert u - 1 - z * u * (u - z) == PowerSeries([], 40)
    assert u == closed_form_u231(40)
    assert all(c >= 0 for c in u.integer_coefficients())


def test_u231_superadditive_to_40():
    a = solve_u231(40).integer_coefficients()
    for total in range(2, 41):
        for m in range(1, total):
            assert a[m] * a[total - m] <= a[total]


def test_indecomposable_from_total():
    z = PowerSeries.z(10)
    assert indecomposable_from_total(1 / (1 - z)) == z
    with pytest.raises(ValueError):
        indecomposable_from_total(2 + z)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 6), min_size=20, max_size=20))
def test_indecomposable_round_trip(tail):
    u1 = PowerSeries([0, *tail], 20)
    assert indecomposable_from_total(1 / (1 - u1)) == u1


def test_indecomposable_part_of_321_prefix():
    counts = [count_ulis_avoiders((3, 2, 1), n) for n in range(11)]
    u1 = indecomposable_from_total(PowerSeries(counts))
    assert u1[0] == 0
    coeffs = u1.integer_coefficients()
    assert all(0 <= c <= u for c, u in zip(coeffs, counts))
    assert 1 / (1 - u1) == PowerSeries(counts)


def test_find_real_root():
    assert find_real_root([1, -2], 0, 1, 1e-12) == pytest.approx(0.5, abs=1e-12)
    assert find_real_root([1, -4], 0, 1, 1e-12) == pytest.approx(0.25, abs=1e-12)
    root = find_real_root(U231_RADICAND, 0, 0.5, 1e-12)
    assert abs(root - 0.2956) <= 5e-4
    assert abs(1 / root - 3.383) <= 1e-3
    with pytest.raises(ValueError):
        find_real_root([1, 1], 0, 1)
    assert find_real_root([Fraction(1), Fraction(-2)], 0.0, 1.0) == pytest.approx(0.5)


def test_growth_profile():
    assert growth_profile({n: 1 for n in range(6)}) == [(n, 1.0) for n in range(1, 6)]
    roots = growth_profile(CountTable((2, 3, 1), "permutations", "series", tuple(enumerate(U231))))
    values = [r for n, r in roots if n >= 4]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < 3.383
    with pytest.raises(ValueError):
        growth_profile([(1, 0)])
