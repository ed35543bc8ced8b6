from fractions import Fraction as Fr
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbralkit import (
    CompositionConstantTerm,
    DivisionByZeroSeries,
    NotDeltaSeries,
    OrderMismatch,
    PrecisionExhausted,
    Series,
    bernoulli_number,
    series_add,
    series_antideriv,
    series_compose,
    series_deriv,
    series_div,
    series_int_pow,
    series_mul,
    series_reversion,
)

from .conftest import delta_series_st, series_st

N = 8


def exp_by_hand(n, a=1):
    return Series([Fr(a) ** i / factorial(i) for i in range(n)])


def test_add_examples():
    assert series_add(Series([1, 1], 4), Series([1, -1], 4)) == Series([2], 4)
    f = Series([3, Fr(1, 2), -1])
    assert series_add(f, Series.zero(3)) == f
    e = Series([1, 1, Fr(1, 2)])
    assert series_add(e, e) == Series([2, 2, 1])


def test_add_truncates_to_min_precision():
    assert series_add(Series([1, 2, 3]), Series([1, 1])).precision == 2


def test_mul_examples():
    t = Series.t(4)
    assert series_mul(t, t) == Series([0, 0, 1], 4)
    assert series_mul(Series([1, 1], 4), Series([1, -1], 4)) == Series([1, 0, -1], 4)
    assert series_mul(exp_by_hand(N), exp_by_hand(N, -1)) == Series.one(N)


def test_exp_constructor_matches_hand_expansion():
    assert Series.exp(N) == exp_by_hand(N)
    assert Series.exp(N, Fr(-2, 3)) == exp_by_hand(N, Fr(-2, 3))


def test_div_examples():
    t = Series.t(6)
    assert series_div(Series([0, 0, 1], 6), t) == Series([0, 1], 5)
    em1 = Series.exp(7) - 1
    # long division: (e^t - 1)/t has coefficients 1/(n+1)!
    assert series_div(em1, Series.t(7)) == Series([Fr(1, factorial(i + 1)) for i in range(6)])
    # t/(e^t - 1) has coefficients B_n / n!, checked against the Bernoulli recurrence
    q = series_div(Series.t(10), Series.exp(10) - 1)
    assert q.precision == 9
    assert list(q.coeffs) == [bernoulli_number(i) / factorial(i) for i in range(9)]
    assert list(q.coeffs[:3]) == [1, Fr(-1, 2), Fr(1, 12)]


def test_div_errors():
    with pytest.raises(DivisionByZeroSeries):
        series_div(Series.one(4), Series.zero(4))
    with pytest.raises(OrderMismatch):
        series_div(Series.t(4), Series([0, 0, 1], 4))


def test_int_pow_examples():
    f = Series([3, 1, 2], 5)
    assert series_int_pow(f, 0) == Series.one(5)
    assert series_int_pow(Series([1, 1], 4), 2) == Series([1, 2, 1], 4)
    b = series_div(Series.t(9), Series.exp(9) - 1)
    assert series_int_pow(b, -1) == series_div(Series.exp(9) - 1, Series.t(9))
    with pytest.raises(OrderMismatch):
        series_int_pow(Series.t(4), -1)


def test_compose_examples():
    g = Series([0, 2, -1, 5])
    assert series_compose(Series.t(4), g) == g
    # -log(1 - t) composed with 1 - e^{-t} is exactly t
    neglog = Series([0] + [Fr(1, n) for n in range(1, N)])
    u = Series.one(N) - Series.exp(N, -1)
    assert series_compose(neglog, u) == Series.t(N)
    assert series_compose(Series([0, 0, 1], 5), Series([0, 1, 1], 5)) == Series([0, 0, 1, 2, 1])
    with pytest.raises(CompositionConstantTerm):
        series_compose(Series.t(3), Series([1, 1, 0]))


def test_reversion_examples():
    assert series_reversion(Series.t(6)) == Series.t(6)
    log1p = Series([0] + [Fr((-1) ** (n + 1), n) for n in range(1, N)])
    assert series_reversion(Series.exp(N) - 1) == log1p
    geo = Series([0] + [1] * (N - 1))  # t/(1-t)
    alt = Series([0] + [(-1) ** (n + 1) for n in range(1, N)])  # t/(1+t)
    assert series_reversion(geo) == alt
    with pytest.raises(NotDeltaSeries):
        series_reversion(Series([1, 1, 0]))
    with pytest.raises(NotDeltaSeries):
        series_reversion(Series([0, 0, 1]))


def test_deriv_antideriv_examples():
    assert series_deriv(Series([0, 0, 1])) == Series([0, 2])
    assert series_deriv(Series([7], 4)) == Series.zero(3)
    assert series_deriv(Series.exp(N)) == Series.exp(N - 1)
    with pytest.raises(PrecisionExhausted):
        series_deriv(Series([1]))
    assert series_antideriv(Series.one(3)) == Series.t(4)
    assert series_antideriv(Series([0, 2], 3)) == Series([0, 0, 1], 4)
    f = Series([5, 1, -2, 3])
    assert series_antideriv(series_deriv(f)) == Series([0, 1, -2, 3])


def test_egf_accessor_and_order():
    f = Series([0, 0, Fr(1, 2), Fr(1, 6)])
    assert f.order == 2
    assert Series.zero(3).order is None
    assert [f.egf_coefficient(i) for i in range(4)] == [0, 0, 1, 1]
    assert Series.from_egf([1, 1, 1, 1]) == Series.exp(4)
    with pytest.raises(PrecisionExhausted):
        f.egf_coefficient(4)


def test_json_round_trip():
    f = Series([1, Fr(-1, 2), Fr(1, 12)], 5)
    obj = f.to_json()
    assert obj == {"var": "t", "precision": 5, "coeffs": ["1", "-1/2", "1/12", "0", "0"]}
    assert Series.from_json(obj) == f


@given(series_st(), series_st(), series_st())
def test_ring_axioms(f, g, h):
    assert series_mul(f, g) == series_mul(g, f)
    assert series_add(f, g) == series_add(g, f)
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, series_add(g, h)) == series_add(series_mul(f, g), series_mul(f, h))


@given(series_st(), series_st(min_order=0), st.integers(0, 2))
def test_div_undoes_mul(f, g, shift):
    g = Series([0] * shift + list(g.coeffs))
    if g.order is None:
        return
    prod = series_mul(f, g)
    q = series_div(prod, g)
    assert q == f.truncate(q.precision)


@settings(max_examples=40)
@given(delta_series_st())
def test_reversion_round_trip(f):
    fbar = series_reversion(f)
    assert series_compose(f, fbar) == Series.t(N)
    assert series_reversion(fbar) == f


@given(series_st())
def test_deriv_of_antideriv(f):
    assert series_deriv(series_antideriv(f)) == f


@given(series_st(precision=8), series_st(precision=8), st.integers(0, 3), st.integers(0, 3))
def test_order_is_additive(f, g, a, b):
    f = Series([0] * a + list(f.coeffs), 8)
    g = Series([0] * b + list(g.coeffs), 8)
    if f.order is None or g.order is None or f.order + g.order >= 8:
        return
    assert series_mul(f, g).order == f.order + g.order


@given(series_st())
def test_egf_identity(f):
    for i in range(f.precision):
        assert f.egf_coefficient(i) == factorial(i) * f.coeffs[i]


def test_immutability():
    f = Series([1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = ()
