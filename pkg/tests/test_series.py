from fractions import Fraction as Fr

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rationals
from oracles import X, Y_, series_to_sympy, truncate
from curve_census.normalform.series import OrderMismatch, PowerSeries2, divide_by_x, ps_compose_x


@st.composite
def series(draw, order=6, min_degree=0):
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            if i + j >= min_degree and draw(st.booleans()):
                coeffs[(i, j)] = draw(small_rationals)
    return PowerSeries2(order, coeffs)


def test_x_times_y():
    assert PowerSeries2.x(4) * PowerSeries2.y(4) == PowerSeries2(4, {(1, 1): 1})


def test_difference_of_squares():
    one_plus = PowerSeries2(5, {(0, 0): 1, (1, 0): 1})
    one_minus = PowerSeries2(5, {(0, 0): 1, (1, 0): -1})
    assert one_plus * one_minus == PowerSeries2(5, {(0, 0): 1, (2, 0): -1})


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        PowerSeries2.x(3) + PowerSeries2.x(4)
    with pytest.raises(OrderMismatch):
        PowerSeries2.x(3) * PowerSeries2.x(4)


def test_truncation_is_respected():
    p = PowerSeries2(3, {(2, 2): 1, (1, 1): 1})
    assert p.coeffs == {(1, 1): 1}
    assert (PowerSeries2.x(3) * PowerSeries2(3, {(3, 0): 1})).is_zero()


def test_rho_accessor_uses_factorials():
    p = PowerSeries2(6, {(3, 2): Fr(1, 12)})
    assert p.rho(3, 2) == 1
    with pytest.raises(IndexError):
        p.rho(5, 2)


@given(series(), series())
def test_add_commutes(p, q):
    assert p + q == q + p


@given(series(), series())
def test_product_matches_sympy(p, q):
    expected = truncate(series_to_sympy(p) * series_to_sympy(q), 6)
    assert (p * q).coeffs == expected


def test_shift_y_by_x_squared():
    rho = PowerSeries2(6, {(0, 2): 1})
    out = ps_compose_x(rho, [0, 0, 1], "y")
    assert out == PowerSeries2(6, {(0, 2): 1, (2, 1): 2, (4, 0): 1})


@given(series())
def test_zero_shift_is_identity(rho):
    assert ps_compose_x(rho, [0, 0, 0], "x") == rho
    assert ps_compose_x(rho, [], "y") == rho


@given(series(), st.lists(small_rationals, min_size=1, max_size=5))
def test_shift_then_unshift(rho, tail):
    g = [0] + tail
    back = ps_compose_x(ps_compose_x(rho, g, "x"), [-c for c in g], "x")
    assert back == rho


@given(series(), st.lists(small_rationals, min_size=1, max_size=4))
def test_shift_matches_sympy(rho, tail):
    g = [0] + tail
    gy = sum(c * Y_**k for k, c in enumerate(g))
    expected = truncate(series_to_sympy(rho).subs(X, X + gy), rho.order)
    assert ps_compose_x(rho, g, "x").coeffs == expected


@given(series(), small_rationals, small_rationals, small_rationals, small_rationals)
def test_linear_change_matches_general_composition(rho, a, b, c, d):
    n = rho.order
    Xs = PowerSeries2(n, {(1, 0): a, (0, 1): b})
    Ys = PowerSeries2(n, {(1, 0): c, (0, 1): d})
    assert rho.linear_change(a, b, c, d) == rho.compose(Xs, Ys)


def test_capped_shift_agrees_on_low_y_degree():
    rho = PowerSeries2(8, {(i, j): Fr(i + 1, j + 2) for i in range(9) for j in range(9 - i)})
    g = [0, Fr(1, 3), -2, Fr(5, 7)]
    full = ps_compose_x(rho, g, "x")
    capped = ps_compose_x(rho, g, "x", cap=2)
    assert capped.coeffs == {k: v for k, v in full.coeffs.items() if k[1] <= 2}


def test_divide_by_x():
    assert divide_by_x(PowerSeries2(4, {(1, 2): 3})) == PowerSeries2(3, {(0, 2): 3})
    with pytest.raises(ArithmeticError):
        divide_by_x(PowerSeries2(4, {(0, 3): 1}))


def test_along_substitutes_univariate():
    rho = PowerSeries2(6, {(0, 2): 1, (3, 0): 1})
    assert rho.along([0, 0, 1]) == [0, 0, 0, 1, 1, 0, 0]


@given(series(), small_rationals, small_rationals, small_rationals)
def test_triangular_and_swap_changes_match_composition(rho, a, c, d):
    n = rho.order
    for m in ((a, 0, c, d), (0, a, c, 0)):
        Xs = PowerSeries2(n, {(1, 0): m[0], (0, 1): m[1]})
        Ys = PowerSeries2(n, {(1, 0): m[2], (0, 1): m[3]})
        assert rho.linear_change(*m) == rho.compose(Xs, Ys)
