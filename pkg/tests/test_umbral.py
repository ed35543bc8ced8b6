from fractions import Fraction as Fr
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbralkit import (
    BasisMismatch,
    Poly,
    PrecisionExhausted,
    Series,
    ShefferPair,
    apply_operator,
    appell_recurrence_step,
    connection_coefficients,
    expand_in_basis,
    functional_apply,
    sheffer_deriv_check,
    sheffer_polynomial,
    stirling2,
)
from umbralkit.families import (
    bernoulli_pair,
    euler_pair,
    euler_poly,
    g_mixed,
    mixed_pair,
    mixed_poly,
)
from umbralkit.poly import poly_shift
from umbralkit.series import series_deriv, series_int_pow, series_mul

from .conftest import poly_st, series_st, small_rats

X = Poly.x()


def bernoulli_appell(N=10):
    """(e^t - 1)/t, the pair whose sequence is B_n(x)."""
    return bernoulli_pair(1, N)


class TestFunctional:
    def test_kronecker(self):
        for k in range(11):
            for n in range(11):
                expected = factorial(n) if n == k else 0
                assert functional_apply(Series.monomial(k, 12), Poly.monomial(n)) == expected

    def test_examples(self):
        assert functional_apply(Series.monomial(2, 4), Poly.monomial(2)) == 2
        assert functional_apply(Series.monomial(2, 4), Poly.monomial(3)) == 0
        assert functional_apply(Series.exp(4, 2), Poly([1, 0, 1])) == 5

    def test_precision_guard(self):
        with pytest.raises(PrecisionExhausted):
            functional_apply(Series.one(3), Poly.monomial(3))
        assert functional_apply(Series.one(1), Poly()) == 0

    @settings(max_examples=150)
    @given(poly_st(), small_rats)
    def test_evaluation_functional(self, p, y):
        assert functional_apply(Series.exp(8, y), p) == p(y)

    @settings(max_examples=150)
    @given(series_st(precision=8), poly_st(max_degree=5))
    def test_x_multiplication_is_derivative(self, f, p):
        assert functional_apply(f, X * p) == functional_apply(series_deriv(f), p)


class TestOperator:
    def test_examples(self):
        assert apply_operator(Series.t(5), Poly.monomial(3)) == Poly([0, 0, 3])
        assert apply_operator(Series.exp(4, 1), Poly.monomial(2)) == Poly([1, 2, 1])
        p = Poly([1, Fr(2, 3), -4])
        assert apply_operator(Series.one(3), p) == p

    @settings(max_examples=150)
    @given(poly_st(), small_rats)
    def test_translation(self, p, y):
        assert apply_operator(Series.exp(8, y), p) == poly_shift(p, y)

    @given(series_st(precision=7), series_st(precision=7), poly_st())
    def test_multiplicative_and_linear(self, f, g, p):
        assert apply_operator(series_mul(f, g), p) == apply_operator(f, apply_operator(g, p))
        assert apply_operator(f + g, p) == apply_operator(f, p) + apply_operator(g, p)

    @given(series_st(precision=7), poly_st(), poly_st())
    def test_linear_in_polynomial(self, f, p, q):
        assert apply_operator(f, p + q) == apply_operator(f, p) + apply_operator(f, q)


class TestSheffer:
    def test_pair_validation(self):
        with pytest.raises(ValueError):
            ShefferPair(Series.t(4), Series.t(4))
        with pytest.raises(Exception):
            ShefferPair(Series.one(4), Series.one(4))
        assert ShefferPair.appell(Series.one(4)).is_appell

    def test_examples(self):
        assert sheffer_polynomial(ShefferPair.appell(Series.one(6)), 3) == Poly.monomial(3)
        assert sheffer_polynomial(bernoulli_appell(), 1) == Poly([Fr(-1, 2), 1])
        pair = mixed_pair(0, 1, 6)
        assert sheffer_polynomial(pair, 2) == Poly([Fr(1, 6), 1, 1])

    def test_falling_factorials(self):
        # (1, e^t - 1): generating function (1 + t)^y, so s_n(x) = x(x-1)...(x-n+1)
        pair = ShefferPair(Series.one(9), Series.exp(9) - 1)
        for n in range(8):
            expected = Poly.constant(1)
            for i in range(n):
                expected = expected * (X - i)
            assert sheffer_polynomial(pair, n) == expected

    def test_touchard_polynomials(self):
        # (1, log(1 + t)): s_n(x) = sum_j S2(n, j) x^j
        log1p = Series([0] + [Fr((-1) ** (n + 1), n) for n in range(1, 9)])
        pair = ShefferPair(Series.one(9), log1p)
        for n in range(8):
            assert sheffer_polynomial(pair, n) == Poly([stirling2(n, j) for j in range(n + 1)])

    def test_generating_function_path_matches_appell_path(self):
        for r, k in [(0, 1), (2, -1), (-1, 3)]:
            pair = mixed_pair(r, k, 9)
            for n in range(7):
                a = sheffer_polynomial(pair, n, method="appell")
                b = sheffer_polynomial(pair, n, method="generating-function")
                assert a == b

    def test_biorthogonality_non_appell(self):
        g = Series([1, 2, Fr(-1, 3), 5, 0, 1, 1, 1])
        f = Series([0, 1, Fr(1, 2), 1, -2, 0, 3, 1])
        pair = ShefferPair(g, f)
        for n in range(7):
            sn = sheffer_polynomial(pair, n)
            for k in range(7):
                val = functional_apply(series_mul(g, series_int_pow(f, k)), sn)
                assert val == (factorial(n) if n == k else 0)

    def test_deriv_check(self):
        assert sheffer_deriv_check(bernoulli_appell(), 3)
        assert sheffer_deriv_check(mixed_pair(2, 2, 7), 4)
        assert sheffer_deriv_check(ShefferPair.appell(Series.one(8)), 5)
        pair = ShefferPair(Series.one(9), Series.exp(9) - 1)
        assert all(sheffer_deriv_check(pair, n) for n in range(1, 7))

    def test_appell_recurrence_step(self):
        mono = ShefferPair.appell(Series.one(8))
        assert appell_recurrence_step(mono, Poly.monomial(4)) == Poly.monomial(5)
        assert appell_recurrence_step(bernoulli_appell(), Poly.constant(1)) == Poly([Fr(-1, 2), 1])
        pair = mixed_pair(1, 1, 6)
        s1 = sheffer_polynomial(pair, 1)
        assert appell_recurrence_step(pair, s1) == sheffer_polynomial(pair, 2)


class TestConnection:
    def test_identity_change_is_kronecker(self):
        pair = mixed_pair(2, -1, 9)
        for n in range(7):
            row = connection_coefficients(pair, pair, n)
            assert row == [1 if m == n else 0 for m in range(n + 1)]

    def test_bernoulli_target(self):
        r, k, s = 2, 1, 1
        for n in range(6):
            row = connection_coefficients(mixed_pair(r, k, n + 2), bernoulli_pair(s, n + 2), n)
            from math import comb

            assert row == [comb(n, m) * mixed_poly(n - m, r - s, k, 0) for m in range(n + 1)]

    def test_euler_target(self):
        from math import comb

        r, k, s = 1, 2, 2
        for n in range(6):
            row = connection_coefficients(mixed_pair(r, k, n + 2), euler_pair(s, n + 2), n)
            expected = [
                Fr(comb(n, m), 2**s) * sum(comb(s, j) * mixed_poly(n - m, r, k, j) for j in range(s + 1))
                for m in range(n + 1)
            ]
            assert row == expected

    def test_non_appell_connection(self):
        # powers x^n in the falling-factorial basis: coefficients S2(n, m)
        mono = ShefferPair.appell(Series.one(9))
        falling = ShefferPair(Series.one(9), Series.exp(9) - 1)
        for n in range(7):
            assert connection_coefficients(mono, falling, n) == [stirling2(n, m) for m in range(n + 1)]

    def test_expand_in_basis(self):
        terms = expand_in_basis(0, mixed_pair(3, 2, 4), euler_pair(1, 4))
        assert terms == [(1, Poly.constant(1))]
        terms = expand_in_basis(2, mixed_pair(1, 1, 4), euler_pair(1, 4))
        assert [p for _, p in terms] == [euler_poly(m, 1) for m in range(3)]
        expand_in_basis(3, mixed_pair(2, 1, 5), bernoulli_pair(1, 5))

    def test_basis_mismatch_is_reported(self, monkeypatch):
        import umbralkit.umbral as um

        monkeypatch.setattr(um, "connection_coefficients", lambda a, b, n: [Fr(0)] * (n + 1))
        with pytest.raises(BasisMismatch):
            um.expand_in_basis(2, mixed_pair(1, 1, 4), euler_pair(1, 4))
