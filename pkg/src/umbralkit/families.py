"""Polynomial families built on the umbral engine.

Naming used throughout::

    higher_bernoulli(n, r)      EGF (t/(e^t-1))^r e^{xt}
    poly_bernoulli(n, k)        EGF Li_k(1-e^{-t})/(1-e^{-t}) e^{xt}
    mixed path A..D (n, r, k)   EGF (t/(e^t-1))^r Li_k(1-e^{-t})/(1-e^{-t}) e^{xt}
    euler_poly(n, s)            Appell for ((e^t+1)/2)^s
    frobenius_euler_poly        Appell for ((e^t-lam)/(1-lam))^s

The mixed-type polynomial is computed four ways that share nothing beyond
the higher-order Bernoulli / poly-Bernoulli primitives:

A. apply ``1/g_{r,k}(t)`` to ``x^n`` (operator path),
B. binomial convolution of poly-Bernoulli numbers with higher-order
   Bernoulli polynomials (or the swapped form),
C. finite-difference average of shifted ``B_n^{(r)}(x - j)``,
D. Stirling-weighted expansion in the ``B_j^{(r)}(x)`` basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Union

from .combinat import stirling2
from .errors import LambdaUnit
from .poly import Poly, poly_shift
from .rational import RatLike, rat, rat_str
from .series import Series, series_compose, series_div, series_int_pow, series_mul
from .umbral import ShefferPair, apply_operator

PolyOrRat = Union[Poly, Fraction]


def working_precision(n: int) -> int:
    """Series precision used when targeting degree ``n``: ``n + 2``."""
    return n + 2


@dataclass(frozen=True)
class FamilyParams:
    """Parameter tuple for one family value or one audited identity case.

    ``m`` and ``y`` are only used by identities that need an extra index or
    an evaluation point.
    """

    n: int
    r: int = 0
    k: int = 1
    s: int = 0
    lam: Optional[Fraction] = None
    m: Optional[int] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.lam is not None:
            object.__setattr__(self, "lam", rat(self.lam))
            if self.lam == 1:
                raise LambdaUnit("lambda must differ from 1")
        if self.y is not None:
            object.__setattr__(self, "y", rat(self.y))

    def to_json(self) -> dict:
        out = {"n": self.n, "r": self.r, "k": self.k, "s": self.s}
        if self.lam is not None:
            out["lambda"] = rat_str(self.lam)
        if self.m is not None:
            out["m"] = self.m
        if self.y is not None:
            out["y"] = rat_str(self.y)
        return out


# -- generating-function factors -----------------------------------------


def one_minus_exp_neg(N: int) -> Series:
    """``u = 1 - e^{-t}`` (a delta series)."""
    return Series.one(N) - Series.exp(N, -1)


@lru_cache(maxsize=None)
def polylog_series(k: int, N: int) -> Series:
    """``Li_k(1 - e^{-t})`` to precision N, for any integer k.

    ``u = 1 - e^{-t}`` has order 1, so only ``Li_k``'s first N terms matter.
    """
    outer = Series([0] + [Fraction(1, j**k) if k >= 0 else Fraction(j ** (-k)) for j in range(1, N)], N)
    return series_compose(outer, one_minus_exp_neg(N))


@lru_cache(maxsize=None)
def poly_bernoulli_factor(k: int, N: int) -> Series:
    """``Li_k(1 - e^{-t}) / (1 - e^{-t})`` to precision N."""
    return series_div(polylog_series(k, N + 1), one_minus_exp_neg(N + 1))


@lru_cache(maxsize=None)
def bernoulli_factor(r: int, N: int) -> Series:
    """``(t / (e^t - 1))^r`` to precision N; r may be negative."""
    base = series_div(Series.t(N + 1), Series.exp(N + 1) - 1)
    return series_int_pow(base, r)


@lru_cache(maxsize=None)
def mixed_factor(r: int, k: int, N: int) -> Series:
    """``1 / g_{r,k}(t)``: the full mixed-type generating factor without ``e^{xt}``."""
    return series_mul(bernoulli_factor(r, N), poly_bernoulli_factor(k, N))


@lru_cache(maxsize=None)
def g_mixed(r: int, k: int, N: int) -> Series:
    """``g_{r,k}(t) = ((e^t-1)/t)^r (1-e^{-t}) / Li_k(1-e^{-t})``."""
    return series_div(Series.one(N), mixed_factor(r, k, N))


@lru_cache(maxsize=None)
def euler_factor(s: int, N: int) -> Series:
    """``((e^t + 1)/2)^s``."""
    return series_int_pow((Series.exp(N) + 1) / 2, s)


def frobenius_euler_factor(s: int, lam: RatLike, N: int) -> Series:
    """``((e^t - lam)/(1 - lam))^s``."""
    lam = rat(lam)
    if lam == 1:
        raise LambdaUnit("lambda = 1 makes (e^t - lambda)/(1 - lambda) undefined")
    return _frobenius_euler_factor(s, lam, N)


@lru_cache(maxsize=None)
def _frobenius_euler_factor(s: int, lam: Fraction, N: int) -> Series:
    return series_int_pow((Series.exp(N) - lam) / (1 - lam), s)


def mixed_pair(r: int, k: int, N: int) -> ShefferPair:
    return ShefferPair.appell(g_mixed(r, k, N))


def bernoulli_pair(s: int, N: int) -> ShefferPair:
    return ShefferPair.appell(bernoulli_factor(-s, N))


def euler_pair(s: int, N: int) -> ShefferPair:
    return ShefferPair.appell(euler_factor(s, N))


def frobenius_euler_pair(s: int, lam: RatLike, N: int) -> ShefferPair:
    return ShefferPair.appell(frobenius_euler_factor(s, lam, N))


# -- bivariate generating function ---------------------------------------


@dataclass(frozen=True)
class PolySeries:
    """Truncated series in t whose coefficients are polynomials in x."""

    coeffs: tuple[Poly, ...] = field(default_factory=tuple)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def egf_coefficient(self, i: int) -> Poly:
        return self.coeffs[i] * factorial(i)


def times_exp_xt(factor: Series) -> PolySeries:
    """``factor(t) * e^{xt}`` with x kept symbolic."""
    out = []
    for j in range(factor.precision):
        out.append(
            Poly([factor.coeffs[j - i] / factorial(i) for i in range(j + 1)])
        )
    return PolySeries(tuple(out))


def mixed_gf(r: int, k: int, N: int) -> PolySeries:
    """Bivariate truncation of the mixed-type generating function."""
    return times_exp_xt(mixed_factor(r, k, N))


# -- single-parameter families ---------------------------------------------


def _maybe_eval(p: Poly, at: Optional[RatLike]) -> PolyOrRat:
    return p if at is None else p(at)


@lru_cache(maxsize=None)
def _higher_bernoulli_poly(n: int, r: int) -> Poly:
    return apply_operator(bernoulli_factor(r, working_precision(n)), Poly.monomial(n))


def higher_bernoulli(n: int, r: int, at: Optional[RatLike] = None) -> PolyOrRat:
    """Higher-order Bernoulli polynomial of order r, or its value at ``at``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _maybe_eval(_higher_bernoulli_poly(n, r), at)


@lru_cache(maxsize=None)
def _poly_bernoulli_poly(n: int, k: int) -> Poly:
    return apply_operator(poly_bernoulli_factor(k, working_precision(n)), Poly.monomial(n))


def poly_bernoulli(n: int, k: int, at: Optional[RatLike] = None) -> PolyOrRat:
    """Poly-Bernoulli polynomial of index k, or its value at ``at``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _maybe_eval(_poly_bernoulli_poly(n, k), at)


@lru_cache(maxsize=None)
def _euler_poly(n: int, s: int) -> Poly:
    N = working_precision(n)
    return apply_operator(series_div(Series.one(N), euler_factor(s, N)), Poly.monomial(n))


def euler_poly(n: int, s: int, at: Optional[RatLike] = None) -> PolyOrRat:
    """Higher-order Euler polynomial of order s."""
    if n < 0 or s < 0:
        raise ValueError("need n >= 0 and s >= 0")
    return _maybe_eval(_euler_poly(n, s), at)


@lru_cache(maxsize=None)
def _frobenius_euler_poly(n: int, s: int, lam: Fraction) -> Poly:
    N = working_precision(n)
    g = frobenius_euler_factor(s, lam, N)
    return apply_operator(series_div(Series.one(N), g), Poly.monomial(n))


def frobenius_euler_poly(n: int, s: int, lam: RatLike, at: Optional[RatLike] = None) -> PolyOrRat:
    """Frobenius-Euler polynomial of order s with parameter ``lam != 1``."""
    lam = rat(lam)
    if lam == 1:
        raise LambdaUnit("lambda must differ from 1")
    if n < 0 or s < 0:
        raise ValueError("need n >= 0 and s >= 0")
    return _maybe_eval(_frobenius_euler_poly(n, s, lam), at)


# -- the mixed-type polynomial, four ways ----------------------------------


def _inv_power(m: int, k: int) -> Fraction:
    """``1/(m)^k`` for any integer k."""
    return Fraction(1, m**k) if k >= 0 else Fraction(m ** (-k))


@lru_cache(maxsize=None)
def mixed_poly_gf_path(n: int, r: int, k: int) -> Poly:
    """Path A: ``(1/g_{r,k}(t)) x^n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return apply_operator(mixed_factor(r, k, working_precision(n)), Poly.monomial(n))


@lru_cache(maxsize=None)
def mixed_poly_conv_path(n: int, r: int, k: int, swapped: bool = False) -> Poly:
    """Path B: binomial convolution of the two constituent families.

    Default form is ``sum_l C(n,l) B^{(k)}_{n-l} BB^{(r)}_l(x)``; with
    ``swapped=True`` it is ``sum_l C(n,l) BB^{(r)}_{n-l} B^{(k)}_l(x)``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Poly()
    for l in range(n + 1):
        if swapped:
            c = _higher_bernoulli_poly(n - l, r)(0)
            p = _poly_bernoulli_poly(l, k)
        else:
            c = _poly_bernoulli_poly(n - l, k)(0)
            p = _higher_bernoulli_poly(l, r)
        acc = acc + p * (comb(n, l) * c)
    return acc


@lru_cache(maxsize=None)
def mixed_poly_shift_avg_path(n: int, r: int, k: int) -> Poly:
    """Path C: ``sum_m (m+1)^{-k} sum_j (-1)^j C(m,j) BB_n^{(r)}(x - j)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    base = _higher_bernoulli_poly(n, r)
    shifted = [poly_shift(base, -j) for j in range(n + 1)]
    acc = Poly()
    for m in range(n + 1):
        inner = Poly()
        for j in range(m + 1):
            term = shifted[j] * comb(m, j)
            inner = inner - term if j % 2 else inner + term
        acc = acc + inner * _inv_power(m + 1, k)
    return acc


def stirling_weight(n: int, j: int, k: int) -> Fraction:
    """Coefficient of ``BB_j^{(r)}(x)`` in path D (independent of r)."""
    total = Fraction(0)
    for m in range(n - j + 1):
        sign = -1 if (n - m - j) % 2 else 1
        total += sign * _inv_power(m + 1, k) * factorial(m) * stirling2(n - j, m)
    return comb(n, j) * total


@lru_cache(maxsize=None)
def mixed_poly_stirling_path(n: int, r: int, k: int) -> Poly:
    """Path D in the higher-order Bernoulli basis."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Poly()
    for j in range(n + 1):
        acc = acc + _higher_bernoulli_poly(j, r) * stirling_weight(n, j, k)
    return acc


@lru_cache(maxsize=None)
def mixed_poly_stirling_monomial(n: int, r: int, k: int) -> Poly:
    """Path D fully expanded into monomials, using only Bernoulli numbers of order r.

    Coefficient of ``x^l`` is
    ``sum_{j=l}^{n} sum_m (-1)^{n-m-j} C(n,j) C(j,l) m!/(m+1)^k S2(n-j,m) BB^{(r)}_{j-l}``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    numbers = [_higher_bernoulli_poly(i, r)(0) for i in range(n + 1)]
    coeffs = []
    for l in range(n + 1):
        c = Fraction(0)
        for j in range(l, n + 1):
            c += stirling_weight(n, j, k) * comb(j, l) * numbers[j - l]
        coeffs.append(c)
    return Poly(coeffs)


def mixed_poly(n: int, r: int, k: int, at: Optional[RatLike] = None) -> PolyOrRat:
    """The mixed-type polynomial (path A), or its value at ``at``."""
    return _maybe_eval(mixed_poly_gf_path(n, r, k), at)


def mixed_number(n: int, r: int, k: int) -> Fraction:
    return mixed_poly_gf_path(n, r, k)(0)
