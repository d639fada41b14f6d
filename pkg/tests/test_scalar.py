from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sqw.errors import NotInvertible, PrecisionError
from sqw.scalar import (INF, Q, TruncSeries, adaptive, rational_str, series_equal_mod, series_inv,
                        working_precision)

from strategies import rationals, series


def test_rational_coercion():
    assert Q("3/7") == Q(3, 7)
    assert Q(Fraction(-2, 6)) == Q(-1, 3)
    assert rational_str(Q(6, 4)) == "3/2"
    with pytest.raises(TypeError):
        Q(0.5)


def test_inverse_of_one():
    assert series_inv(TruncSeries.const(1)) == TruncSeries.const(1)


def test_inverse_geometric():
    inv = series_inv(TruncSeries.from_coeffs([1, -1], order=3))
    assert inv.order == 3
    assert inv.coefficients(0, 3) == [1, 1, 1, 1]


def test_inverse_two_plus_t():
    inv = series_inv(TruncSeries.from_coeffs([2, 1], order=2))
    assert inv.coefficients(0, 2) == [Q(1, 2), Q(-1, 4), Q(1, 8)]
    back = inv * TruncSeries.from_coeffs([2, 1], order=2)
    assert series_equal_mod(back, 1, 2)


def test_inverse_requires_unit():
    with pytest.raises(NotInvertible):
        series_inv(TruncSeries.from_coeffs([0, 1], order=4))
    with pytest.raises(NotInvertible):
        series_inv(TruncSeries.from_coeffs([], order=4))


def test_laurent_division_allowed_internally():
    s = TruncSeries.from_coeffs([0, 2, 1], order=6)
    inv = s.inverse()
    assert inv.valuation() == -1
    assert series_equal_mod(inv * s, 1, 4)


def test_exact_inverse_respects_working_precision():
    with working_precision(5):
        inv = TruncSeries.from_coeffs([1, -1]).inverse()
    assert inv.prec == 5
    with working_precision(9):
        inv = TruncSeries.from_coeffs([1, -1]).inverse()
    assert inv.prec == 9


def test_unknown_coefficient_raises():
    s = TruncSeries.from_coeffs([1, 2], order=1)
    with pytest.raises(PrecisionError):
        s.coeff(2)
    with pytest.raises(PrecisionError):
        series_equal_mod(s, s, 3)


def test_precision_of_product():
    a = TruncSeries.from_coeffs([1, 1], order=3)
    b = TruncSeries.from_coeffs([0, 0, 1], order=6)
    assert (a * b).prec == min(0 + 7, 2 + 4)


def test_zero_times_series_is_exact_zero():
    z = TruncSeries.from_coeffs([1, 1], order=3) * 0
    assert z.is_zero() and z.is_exact


def test_adaptive_raises_slack():
    calls = []

    def compute():
        from sqw.scalar import current_working_precision
        calls.append(current_working_precision())
        s = TruncSeries.monomial(1, -12) * TruncSeries.from_coeffs([1, -1]).inverse()
        return (s,)

    (res,) = adaptive(compute, 4)
    assert res.prec > 4
    assert calls == sorted(calls) and len(calls) >= 2


def test_substitute_scale():
    s = TruncSeries.from_coeffs([1, 2, 3])
    assert s.substitute_scale(2).coefficients(0, 2) == [1, 4, 12]


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    with working_precision(12):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        lhs, rhs = (a * b) * c, a * (b * c)
        assert lhs.prec == rhs.prec and lhs == rhs
        assert a * b == b * a
        dist_l, dist_r = a * (b + c), a * b + a * c
        order = min(dist_l.prec, dist_r.prec) - 1
        if order == INF:
            assert dist_l == dist_r
        else:
            assert series_equal_mod(dist_l, dist_r, order)


@given(series(exact=False), rationals(nonzero=True))
def test_inverse_round_trip(a, c):
    u = a + TruncSeries.const(c) if a.valuation() > 0 else a
    if u.valuation() != 0 or u.coeff(0) == 0:
        return
    inv = series_inv(u)
    assert series_equal_mod(inv * u, 1, inv.order)


@given(series(exact=True), st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_product(a, k):
    with working_precision(10):
        prod = TruncSeries.const(1)
        for _ in range(k):
            prod = prod * a
        power = a ** k
        order = min(power.prec, prod.prec) - 1
        assert power == prod if order == INF else series_equal_mod(power, prod, order)


def test_infinite_precision_marker():
    assert TruncSeries.const(3).prec == INF
    assert TruncSeries.const(3).is_exact
