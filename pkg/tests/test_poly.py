from fractions import Fraction as Fr

import pytest
from hypothesis import given

from umbralkit import Poly, poly_shift

from .conftest import poly_st, small_rats


def test_canonical_form():
    assert Poly([1, 0, 0]).coeffs == (1,)
    assert Poly([]).degree is None
    assert Poly([0]).is_zero()
    assert Poly([0, 0, 3]).degree == 2


def test_shift_examples():
    assert poly_shift(Poly.monomial(2), 1) == Poly([1, 2, 1])
    p = Poly([3, Fr(1, 2), 7])
    assert poly_shift(p, 0) == p
    assert poly_shift(Poly.monomial(3), -1) == Poly([-1, 3, -3, 1])


@given(poly_st(), small_rats, small_rats)
def test_shift_matches_evaluation(p, y, z):
    assert poly_shift(p, y)(z) == p(z + y)


@given(poly_st(), poly_st(), small_rats)
def test_arithmetic_is_evaluation_homomorphism(p, q, z):
    assert (p * q)(z) == p(z) * q(z)
    assert (p + q)(z) == p(z) + q(z)
    assert (p - q)(z) == p(z) - q(z)


def test_deriv_and_pow():
    assert Poly([1, 1]) ** 3 == Poly([1, 3, 3, 1])
    assert Poly([5, 0, 0, 1]).deriv() == Poly([0, 0, 3])
    assert Poly([5, 0, 0, 1]).deriv(2) == Poly([0, 6])
    with pytest.raises(ValueError):
        Poly.x() ** -1


def test_str_and_json():
    assert str(Poly([Fr(-1, 2), 1])) == "x - 1/2"
    assert str(Poly([Fr(1, 6), 1, 1])) == "x^2 + x + 1/6"
    assert str(Poly([0, Fr(-3, 2), 0, -1])) == "-x^3 - 3/2*x"
    assert str(Poly()) == "0"
    p = Poly([Fr(-1, 2), 1])
    assert p.to_json() == {"var": "x", "coeffs": ["-1/2", "1"]}
    assert Poly.from_json(p.to_json()) == p
    assert Poly().to_json() == {"var": "x", "coeffs": []}


@given(poly_st())
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


def test_rejects_floats():
    with pytest.raises(TypeError):
        Poly([0.5])
