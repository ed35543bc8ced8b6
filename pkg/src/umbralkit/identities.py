"""Exact audit of every displayed identity for the mixed-type polynomials.

Each identity is a generator of :class:`IdentityCase` records over an
:class:`AuditGrid`. The two sides of a case are always built by different
code: typically one side is the operator path (path A) and the other is the
formula as typeset, assembled from lower-index values, ordinary Bernoulli
numbers and Stirling numbers.

Statuses are never assumed. Whatever the grid run produces is the result;
``data/golden.json`` stores the outcome of the reference run so the CLI can
flag drift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Optional, Union

from .combinat import bernoulli_number, falling_factorial, stirling1_unsigned, stirling2
from .errors import OrderMismatch
from .families import (
    FamilyParams,
    bernoulli_factor,
    bernoulli_pair,
    euler_pair,
    euler_poly,
    frobenius_euler_pair,
    frobenius_euler_poly,
    g_mixed,
    higher_bernoulli,
    mixed_factor,
    mixed_pair,
    mixed_poly_conv_path,
    mixed_poly_gf_path,
    mixed_poly_shift_avg_path,
    mixed_poly_stirling_monomial,
    mixed_poly_stirling_path,
    one_minus_exp_neg,
    poly_bernoulli,
    poly_bernoulli_factor,
    polylog_series,
    working_precision,
)
from .poly import Poly, poly_shift
from .rational import rat, rat_str
from .series import Series, series_deriv, series_div, series_int_pow, series_mul
from .umbral import (
    ShefferPair,
    apply_operator,
    appell_recurrence_step,
    connection_coefficients,
    functional_apply,
    sheffer_polynomial,
)

HOLDS = "holds-on-grid"
FAILS = "fails-with-counterexample"

SERIES_PRECISION = 10
MAX_COUNTEREXAMPLES = 3

Value = Union[Poly, Fraction, Series, tuple, None]


@dataclass(frozen=True)
class AuditGrid:
    """Inclusive parameter ranges for an audit run."""

    n_range: tuple[int, int] = (0, 8)
    r_range: tuple[int, int] = (-2, 3)
    k_range: tuple[int, int] = (-2, 3)
    s_range: tuple[int, int] = (0, 3)
    m_range: tuple[int, int] = (1, 4)
    lambdas: tuple[Fraction, ...] = (Fraction(-1), Fraction(2), Fraction(1, 2))
    y_values: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(-1), Fraction(7, 3))

    @staticmethod
    def _span(bounds: tuple[int, int]) -> range:
        return range(bounds[0], bounds[1] + 1)

    @property
    def ns(self) -> range:
        return self._span(self.n_range)

    @property
    def rs(self) -> range:
        return self._span(self.r_range)

    @property
    def ks(self) -> range:
        return self._span(self.k_range)

    @property
    def ss(self) -> range:
        return self._span(self.s_range)

    @property
    def ms(self) -> range:
        return self._span(self.m_range)

    def to_json(self) -> dict:
        return {
            "n": list(self.n_range),
            "r": list(self.r_range),
            "k": list(self.k_range),
            "s": list(self.s_range),
            "m": list(self.m_range),
            "lambda": [rat_str(v) for v in self.lambdas],
            "y": [rat_str(v) for v in self.y_values],
            "series_precision": SERIES_PRECISION,
        }


DEFAULT_GRID = AuditGrid()


def value_to_json(value: Value):
    if value is None:
        return None
    if isinstance(value, (Poly, Series)):
        return value.to_json()
    if isinstance(value, tuple):
        return [value_to_json(v) for v in value]
    return rat_str(value)


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    params: FamilyParams
    lhs: Value
    rhs: Value
    equal: bool

    def sort_key(self) -> tuple:
        p = self.params
        return (
            p.n,
            abs(p.r),
            abs(p.k),
            p.r,
            p.k,
            p.s,
            p.m if p.m is not None else -1,
            p.lam if p.lam is not None else Fraction(0),
            p.y if p.y is not None else Fraction(0),
        )

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "lhs": value_to_json(self.lhs),
            "rhs": value_to_json(self.rhs),
        }


@dataclass
class IdentityReport:
    identity_id: str
    grid: dict
    pass_count: int = 0
    fail_count: int = 0
    counterexamples: list[IdentityCase] = field(default_factory=list)

    @property
    def status(self) -> str:
        return HOLDS if self.fail_count == 0 else FAILS

    def to_json(self) -> dict:
        return {
            "identity": self.identity_id,
            "grid": self.grid,
            "pass": self.pass_count,
            "fail": self.fail_count,
            "status": self.status,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }


def _case(identity_id: str, params: FamilyParams, lhs: Value, rhs: Value) -> IdentityCase:
    return IdentityCase(identity_id, params, lhs, rhs, lhs == rhs)


# shorthand used by the formulas below
def s(n: int, r: int, k: int) -> Poly:
    return mixed_poly_gf_path(n, r, k)


def s_num(n: int, r: int, k: int) -> Fraction:
    return mixed_poly_gf_path(n, r, k)(0)


X = Poly.x()


def _nrk(grid: AuditGrid, n_min: int = 0) -> Iterator[tuple[int, int, int]]:
    for n in grid.ns:
        if n < n_min:
            continue
        for r in grid.rs:
            for k in grid.ks:
                yield n, r, k


# -- computation paths ----------------------------------------------------


def _prop1(grid):
    for n, r, k in _nrk(grid):
        yield _case("prop1", FamilyParams(n, r, k), mixed_poly_shift_avg_path(n, r, k), s(n, r, k))


def _eq5(grid):
    for n, r, k in _nrk(grid):
        yield _case("eq5", FamilyParams(n, r, k), mixed_poly_conv_path(n, r, k), s(n, r, k))


def _eq5_swapped(grid):
    for n, r, k in _nrk(grid):
        yield _case(
            "eq5-swapped", FamilyParams(n, r, k), mixed_poly_conv_path(n, r, k, swapped=True), s(n, r, k)
        )


def _eq28(grid):
    for n, r, k in _nrk(grid):
        yield _case("eq28", FamilyParams(n, r, k), mixed_poly_stirling_path(n, r, k), s(n, r, k))


def _eq28_monomial(grid):
    for n, r, k in _nrk(grid):
        yield _case(
            "eq28-monomial", FamilyParams(n, r, k), mixed_poly_stirling_monomial(n, r, k), s(n, r, k)
        )


def _eq14(grid):
    for n, r, k in _nrk(grid):
        pair = mixed_pair(r, k, working_precision(n))
        lhs = sheffer_polynomial(pair, n, method="generating-function")
        yield _case("eq14", FamilyParams(n, r, k), lhs, s(n, r, k))


def _biorthogonality(grid):
    for n, r, k in _nrk(grid):
        N = grid.n_range[1] + 2
        g = g_mixed(r, k, N)
        sn = s(n, r, k)
        tm = Series.one(N)
        for m in range(grid.n_range[1] + 1):
            lhs = functional_apply(series_mul(g, tm), sn)
            rhs = Fraction(factorial(n)) if n == m else Fraction(0)
            yield _case("biorthogonality", FamilyParams(n, r, k, m=m), lhs, rhs)
            tm = series_mul(tm, Series.t(N))


# -- umbral-algebra facts applied to the family ----------------------------


def _eq12_operator(grid):
    for n, r, k in _nrk(grid):
        sn = s(n, r, k)
        for y in grid.y_values:
            lhs = apply_operator(Series.exp(n + 2, y), sn)
            yield _case("eq12-operator", FamilyParams(n, r, k, y=y), lhs, poly_shift(sn, y))


def _eq12_functional(grid):
    for n, r, k in _nrk(grid):
        sn = s(n, r, k)
        for y in grid.y_values:
            lhs = functional_apply(Series.exp(n + 2, y), sn)
            yield _case("eq12-functional", FamilyParams(n, r, k, y=y), lhs, sn(y))


def _eq13(grid):
    for n, r, k in _nrk(grid):
        f = mixed_factor(r, k, n + 3)
        sn = s(n, r, k)
        lhs = functional_apply(f, X * sn)
        rhs = functional_apply(series_deriv(f), sn)
        yield _case("eq13", FamilyParams(n, r, k), lhs, rhs)


def _eq20(grid):
    for n, r, k in _nrk(grid, n_min=1):
        lhs = apply_operator(Series.t(n + 2), s(n, r, k))
        yield _case("eq20", FamilyParams(n, r, k), lhs, s(n - 1, r, k) * n)


def _eq16(grid):
    for n, r, k in _nrk(grid):
        pair = mixed_pair(r, k, n + 3)
        lhs = appell_recurrence_step(pair, s(n, r, k))
        yield _case("eq16", FamilyParams(n, r, k), lhs, s(n + 1, r, k))


def _eq21(grid):
    for n, r, k in _nrk(grid):
        rhs = Poly([comb(n, l) * s_num(n - l, r, k) for l in range(n + 1)])
        yield _case("eq21", FamilyParams(n, r, k), s(n, r, k), rhs)


def _eq23(grid):
    for n in grid.ns:
        for k in grid.ks:
            lhs = apply_operator(poly_bernoulli_factor(k, n + 2), Poly.monomial(n))
            rhs = Poly()
            for m in range(n + 1):
                inner = Poly()
                for j in range(m + 1):
                    inner = inner + (X - j) ** n * ((-1) ** j * comb(m, j))
                rhs = rhs + inner * _inv_power(m + 1, k)
            yield _case("eq23", FamilyParams(n, 0, k), lhs, rhs)


def _eq27(grid):
    for n in grid.ns:
        for k in grid.ks:
            lhs = apply_operator(poly_bernoulli_factor(k, n + 2), Poly.monomial(n))
            coeffs = []
            for j in range(n + 1):
                c = Fraction(0)
                for m in range(n - j + 1):
                    sign = -1 if (n - m - j) % 2 else 1
                    c += sign * _inv_power(m + 1, k) * comb(n, j) * factorial(m) * stirling2(n - j, m)
                coeffs.append(c)
            yield _case("eq27", FamilyParams(n, 0, k), lhs, Poly(coeffs))


def _eq25(grid):
    for n in grid.ns:
        for r in grid.rs:
            rhs = Poly([comb(n, l) * higher_bernoulli(n - l, r, 0) for l in range(n + 1)])
            yield _case("eq25", FamilyParams(n, r, 1), higher_bernoulli(n, r), rhs)


def _eq30(grid):
    N = SERIES_PRECISION
    W = N + 3
    e = Series.exp(W)
    t = Series.t(W)
    for r in grid.rs:
        for k in grid.ks:
            g = g_mixed(r, k, W)
            lhs = series_div(series_deriv(g), g).truncate(N)
            first = series_div((t * e - e + 1) * r, t * (e - 1))
            li_k = polylog_series(k, W)
            li_km1 = polylog_series(k - 1, W)
            second = series_mul(
                series_div(t, e - 1), series_div(li_k - li_km1, t * li_k)
            )
            rhs = (first + second).truncate(N)
            yield _case("eq30", FamilyParams(N, r, k), lhs, rhs)


def _eq32_bernoulli(grid):
    N = SERIES_PRECISION
    e = Series.exp(N + 1)
    t = Series.t(N + 1)
    for r in grid.rs:
        q = series_div((t * e - e + 1) * r, e - 1)
        lhs = (q[0], q[1])
        rhs = (Fraction(0), Fraction(r, 2))
        yield _case("eq32-bernoulli", FamilyParams(N, r, 1), lhs, rhs)


def _eq32_polylog(grid):
    N = SERIES_PRECISION
    u = one_minus_exp_neg(N + 1)
    for k in grid.ks:
        q = series_div(polylog_series(k, N + 1) - polylog_series(k - 1, N + 1), u)
        lhs = (q[0], q[1])
        rhs = (Fraction(0), _inv_power(2, k) - _inv_power(2, k - 1))
        yield _case("eq32-polylog", FamilyParams(N, 0, k), lhs, rhs)


def _eq35(grid):
    for n, r, k in _nrk(grid, n_min=1):
        lhs = apply_operator(Series.t(n + 3), X * s(n, r, k))
        rhs = X * s(n - 1, r, k) * n + s(n, r, k)
        yield _case("eq35", FamilyParams(n, r, k), lhs, rhs)


def _eq36(grid):
    for n, r, k in _nrk(grid):
        lhs = apply_operator(bernoulli_factor(r, n + 2), poly_bernoulli(n, k))
        yield _case("eq36", FamilyParams(n, r, k), lhs, s(n, r, k))


# -- recurrences ------------------------------------------------------------


def _inv_power(m: int, k: int) -> Fraction:
    return Fraction(1, m**k) if k >= 0 else Fraction(m ** (-k))


def _thm2(grid):
    for n, r, k in _nrk(grid):
        lhs = s(n + 1, r, k)
        acc = Poly()
        for l in range(n + 1):
            sign = -1 if (n + 1 - l) % 2 else 1
            acc = acc + s(l, r, k) * (comb(n + 1, l) * sign * bernoulli_number(n + 1 - l))
        rhs = (
            X * s(n, r, k)
            - acc * Fraction(r, n + 1)
            - (s(n + 1, r + 1, k) - s(n + 1, r + 1, k - 1)) * Fraction(1, n + 1)
        )
        yield _case("thm2", FamilyParams(n, r, k), lhs, rhs)


def _thm3(grid):
    for n, r, k in _nrk(grid, n_min=2):
        acc = Poly()
        for l in range(n - 1):
            sign = -1 if (n - l) % 2 else 1
            acc = acc + s(l, r, k) * (sign * comb(n, l) * bernoulli_number(n - l))
        lhs = s(n, r, k) * n + (Poly([Fraction(r, 2)]) - X) * s(n - 1, r, k) * n + acc * r
        rhs = s(n, r + 1, k - 1) - s(n, r + 1, k)
        yield _case("thm3", FamilyParams(n, r, k), lhs, rhs)


def _thm3_corollary(grid):
    for n in grid.ns:
        if n < 2:
            continue
        for k in grid.ks:
            pb = lambda j, kk: poly_bernoulli(j, kk)  # noqa: E731
            lhs = pb(n, k) * n - X * pb(n - 1, k) * n
            rhs = -pb(n, k) + pb(n - 1, k) * Fraction(n, 2)
            for l in range(n - 1):
                rhs = rhs - pb(l, k) * (comb(n, l) * bernoulli_number(n - l))
            for l in range(n + 1):
                rhs = rhs + pb(l, k - 1) * (comb(n, l) * bernoulli_number(n - l))
            yield _case("thm3-corollary", FamilyParams(n, 0, k), lhs, rhs)


# -- dual evaluations ---------------------------------------------------------


def _thm4_stirling_weight(j: int, k: int) -> Fraction:
    total = Fraction(0)
    for m in range(j + 1):
        total += (-1) ** m * factorial(m + 1) * _inv_power(m + 2, k) * stirling2(j, m)
    return total


def _thm4(grid):
    for n, r, k in _nrk(grid, n_min=1):
        rhs = -s(n - 1, r, k) * r + X * s(n - 1, r, k)
        for l in range(n):
            rhs = rhs + s(l, r + 1, k) * (r * Fraction(comb(n - 1, l), (n + 1 - l) * (n - l)))
            weight = (-1) ** (n - 1 - l) * comb(n - 1, l) * _thm4_stirling_weight(n - 1 - l, k)
            rhs = rhs + poly_shift(higher_bernoulli(l, r), -1) * weight
        yield _case("thm4", FamilyParams(n, r, k), s(n, r, k), rhs)


def _eq38_split(grid):
    for n, r, k in _nrk(grid, n_min=1):
        N = n + 2
        a = bernoulli_factor(r, N)
        p = poly_bernoulli_factor(k, N)
        xn1 = Poly.monomial(n - 1)
        for y in grid.y_values:
            e = Series.exp(N, y)
            rhs = (
                functional_apply(series_mul(series_mul(series_deriv(a), p), e), xn1)
                + functional_apply(series_mul(series_mul(a, series_deriv(p)), e), xn1)
                + functional_apply(series_mul(series_mul(a, p), series_deriv(e)), xn1)
            )
            yield _case("eq38-split", FamilyParams(n, r, k, y=y), s(n, r, k)(y), rhs)


def thm5_rhs(n: int, r: int, k: int) -> Fraction:
    total = Fraction(0)
    for l in range(n + 1):
        for m in range(l + 1):
            sign = -1 if (l - m) % 2 else 1
            total += (
                sign
                * comb(l, m)
                * comb(n + 1, l + 1)
                * poly_bernoulli(m, k - 1, 0)
                * higher_bernoulli(n - l, r, 0)
            )
    return total


def thm5_anchor(n: int, r: int, k: int) -> Fraction:
    """``<(t/(e^t-1))^r Li_k(1-e^{-t}) | x^{n+1}>`` evaluated directly."""
    N = n + 3
    f = series_mul(bernoulli_factor(r, N), polylog_series(k, N))
    return functional_apply(f, Poly.monomial(n + 1))


def _thm5_printed(grid):
    for n, r, k in _nrk(grid):
        lhs = sum(
            (comb(n + 1, m) * (-1) ** (n - m) * s_num(n, r, k) for m in range(n + 1)),
            Fraction(0),
        )
        yield _case("thm5-printed", FamilyParams(n, r, k), lhs, thm5_rhs(n, r, k))


def _thm5_derivation(grid):
    for n, r, k in _nrk(grid):
        lhs = sum(
            (comb(n + 1, m) * (-1) ** (n - m) * s_num(m, r, k) for m in range(n + 1)),
            Fraction(0),
        )
        yield _case("thm5-derivation", FamilyParams(n, r, k), lhs, thm5_rhs(n, r, k))


def _thm5_anchor(grid):
    for n, r, k in _nrk(grid):
        N = n + 3
        direct = thm5_anchor(n, r, k)
        # the functional moved onto (1 - e^{-t}) x^{n+1} = x^{n+1} - (x-1)^{n+1}
        diff = Poly.monomial(n + 1) - (X - 1) ** (n + 1)
        via_difference = functional_apply(mixed_factor(r, k, N), diff)
        # the functional moved onto (t/(e^t-1))^r x^{n+1} = BB^{(r)}_{n+1}(x)
        via_bernoulli = functional_apply(polylog_series(k, N), higher_bernoulli(n + 1, r))
        equal = direct == via_difference == via_bernoulli
        yield IdentityCase(
            "thm5-anchor", FamilyParams(n, r, k), via_difference, via_bernoulli, equal
        )


def _lemma6_sides(m: int, k: int, N: int = SERIES_PRECISION) -> tuple[Series, Optional[Series]]:
    W = N + m
    lhs = Series.zero(N)
    p = poly_bernoulli_factor(k, W)
    deriv = p
    for l in range(m + 1):
        if l:
            deriv = series_deriv(deriv)
        lhs = lhs + deriv.truncate(N) * stirling1_unsigned(m, l)
    numerator = Series.zero(W)
    for l in range(m + 1):
        sign = -1 if (m - l) % 2 else 1
        numerator = numerator + poly_bernoulli_factor(k - l, W) * (sign * stirling1_unsigned(m + 1, l + 1))
    try:
        rhs = series_div(numerator, series_int_pow(Series.exp(W) - 1, m))
    except OrderMismatch:
        return lhs, None
    return lhs, rhs.truncate(N)


def _lemma6(grid):
    for m in grid.ms:
        for k in grid.ks:
            lhs, rhs = _lemma6_sides(m, k)
            yield _case("lemma6", FamilyParams(SERIES_PRECISION, 0, k, m=m), lhs, rhs)


def _thm7(grid):
    for n in grid.ns:
        for m in grid.ms:
            for k in grid.ks:
                lhs = Fraction(0)
                for l in range(m + 1):
                    sign = -1 if (m - l) % 2 else 1
                    lhs += sign * stirling1_unsigned(m + 1, l + 1) * s_num(n, m, k - l)
                if n >= m:
                    rhs = falling_factorial(n, m) * sum(
                        (stirling1_unsigned(m, l) * poly_bernoulli(n - m + l, k, 0) for l in range(m + 1)),
                        Fraction(0),
                    )
                else:
                    rhs = Fraction(0)
                yield _case("thm7", FamilyParams(n, m, k, m=m), lhs, rhs)


# -- changes of basis ---------------------------------------------------------


def _recombine(coeffs: list[Fraction], basis: Callable[[int], Poly]) -> Poly:
    return sum((basis(m) * c for m, c in enumerate(coeffs)), Poly())


def _basis_case(identity_id, params, coeffs, basis, source: ShefferPair, target: ShefferPair):
    n = params.n
    rhs = _recombine(coeffs, basis)
    lhs = s(n, params.r, params.k)
    equal = lhs == rhs and coeffs == connection_coefficients(source, target, n)
    return IdentityCase(identity_id, params, lhs, rhs, equal)


def _thm8(grid):
    for n, r, k in _nrk(grid):
        N = working_precision(n)
        source = mixed_pair(r, k, N)
        for sv in grid.ss:
            coeffs = [
                Fraction(comb(n, m), 2**sv)
                * sum((comb(sv, j) * s(n - m, r, k)(j) for j in range(sv + 1)), Fraction(0))
                for m in range(n + 1)
            ]
            yield _basis_case(
                "thm8", FamilyParams(n, r, k, s=sv), coeffs,
                lambda m, sv=sv: euler_poly(m, sv), source, euler_pair(sv, N),
            )


def _thm9(grid):
    for n, r, k in _nrk(grid):
        N = working_precision(n)
        source = mixed_pair(r, k, N)
        for sv in grid.ss:
            coeffs = [comb(n, m) * s_num(n - m, r - sv, k) for m in range(n + 1)]
            yield _basis_case(
                "thm9", FamilyParams(n, r, k, s=sv), [Fraction(c) for c in coeffs],
                lambda m, sv=sv: higher_bernoulli(m, sv), source, bernoulli_pair(sv, N),
            )


def _eq51(grid):
    for n, r, k in _nrk(grid):
        N = working_precision(n)
        source = mixed_pair(r, k, N)
        for sv in grid.ss:
            for lam in grid.lambdas:
                scale = 1 / (1 - lam) ** sv
                coeffs = [
                    scale
                    * comb(n, m)
                    * sum(
                        (comb(sv, j) * (-lam) ** (sv - j) * s(n - m, r, k)(j) for j in range(sv + 1)),
                        Fraction(0),
                    )
                    for m in range(n + 1)
                ]
                yield _basis_case(
                    "eq51", FamilyParams(n, r, k, s=sv, lam=lam), coeffs,
                    lambda m, sv=sv, lam=lam: frobenius_euler_poly(m, sv, lam),
                    source, frobenius_euler_pair(sv, lam, N),
                )


# -- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    identity_id: str
    statement: str
    cases: Callable[[AuditGrid], Iterable[IdentityCase]]


REGISTRY: dict[str, Identity] = {
    ident.identity_id: ident
    for ident in [
        Identity("biorthogonality", "<g_{r,k}(t) t^m | s_n(x)> = n! delta_{n,m}", _biorthogonality),
        Identity("eq12-functional", "<e^{yt} | s_n(x)> = s_n(y)", _eq12_functional),
        Identity("eq12-operator", "e^{yt} s_n(x) = s_n(x + y)", _eq12_operator),
        Identity("eq13", "<f(t) | x p(x)> = <f'(t) | p(x)>", _eq13),
        Identity("eq14", "Sheffer generating-function extraction = operator path", _eq14),
        Identity("eq16", "s_{n+1}(x) = (x - g'(t)/g(t)) s_n(x)", _eq16),
        Identity("eq20", "t s_n(x) = n s_{n-1}(x)", _eq20),
        Identity("eq21", "s_n(x) = sum_l C(n,l) s_{n-l} x^l", _eq21),
        Identity("eq23", "poly-Bernoulli operator on x^n, finite-difference form", _eq23),
        Identity("eq25", "BB_n^{(r)}(x) = sum_l C(n,l) BB_{n-l}^{(r)} x^l", _eq25),
        Identity("eq27", "poly-Bernoulli operator on x^n, Stirling form", _eq27),
        Identity("eq28", "path D in the BB_j^{(r)}(x) basis", _eq28),
        Identity("eq28-monomial", "path D expanded into monomials", _eq28_monomial),
        Identity("eq30", "g'/g closed form (series identity)", _eq30),
        Identity("eq32-bernoulli", "(r t e^t - r e^t + r)/(e^t - 1) = (r/2) t + ...", _eq32_bernoulli),
        Identity("eq32-polylog", "(Li_k - Li_{k-1})(1-e^{-t})/(1-e^{-t}) = (2^-k - 2^-(k-1)) t + ...", _eq32_polylog),
        Identity("eq35", "t x s_n(x) = n x s_{n-1}(x) + s_n(x)", _eq35),
        Identity("eq36", "s_n(x) = (t/(e^t-1))^r B_n^{(k)}(x)", _eq36),
        Identity("eq38-split", "product-rule split of <d/dt GF | x^{n-1}>", _eq38_split),
        Identity("eq5", "s_n = sum_l C(n,l) B^{(k)}_{n-l} BB^{(r)}_l(x)", _eq5),
        Identity("eq5-swapped", "s_n = sum_l C(n,l) BB^{(r)}_{n-l} B^{(k)}_l(x)", _eq5_swapped),
        Identity("eq51", "expansion in Frobenius-Euler polynomials", _eq51),
        Identity("lemma6", "Stirling-weighted derivatives of the poly-Bernoulli factor", _lemma6),
        Identity("prop1", "finite-difference average of shifted BB_n^{(r)}", _prop1),
        Identity("thm2", "three-term recurrence for s_{n+1}", _thm2),
        Identity("thm3", "recurrence mixing orders r and r+1 (n >= 2)", _thm3),
        Identity("thm3-corollary", "r = 0 specialisation of thm3", _thm3_corollary),
        Identity("thm4", "four-term recurrence from the product rule", _thm4),
        Identity("thm5-anchor", "<(t/(e^t-1))^r Li_k(1-e^{-t}) | x^{n+1}> evaluated two ways", _thm5_anchor),
        Identity("thm5-derivation", "thm5 with s_m inside the m-sum", _thm5_derivation),
        Identity("thm5-printed", "thm5 with s_n inside the m-sum, as typeset", _thm5_printed),
        Identity("thm7", "Stirling-weighted sum of s_n^{(m,k-l)}", _thm7),
        Identity("thm8", "expansion in higher-order Euler polynomials", _thm8),
        Identity("thm9", "expansion in higher-order Bernoulli polynomials", _thm9),
    ]
}


def identity_ids() -> list[str]:
    return sorted(REGISTRY)


def audit(identity_id: str, grid: AuditGrid = DEFAULT_GRID) -> IdentityReport:
    try:
        ident = REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None
    report = IdentityReport(identity_id, grid.to_json())
    failures = []
    for case in ident.cases(grid):
        if case.equal:
            report.pass_count += 1
        else:
            report.fail_count += 1
            failures.append(case)
    failures.sort(key=IdentityCase.sort_key)
    report.counterexamples = failures[:MAX_COUNTEREXAMPLES]
    return report


def audit_all(grid: AuditGrid = DEFAULT_GRID, ids: Optional[Iterable[str]] = None) -> list[IdentityReport]:
    chosen = identity_ids() if ids is None else sorted(ids)
    return [audit(i, grid) for i in chosen]


# named entry points grouped as in the module contract
def audit_theorem2(grid: AuditGrid = DEFAULT_GRID) -> IdentityReport:
    return audit("thm2", grid)


def audit_theorem3(grid: AuditGrid = DEFAULT_GRID) -> list[IdentityReport]:
    return audit_all(grid, ["thm3", "thm3-corollary"])


def audit_theorem4(grid: AuditGrid = DEFAULT_GRID) -> list[IdentityReport]:
    return audit_all(grid, ["thm4", "eq38-split"])


def audit_theorem5(grid: AuditGrid = DEFAULT_GRID) -> list[IdentityReport]:
    return audit_all(grid, ["thm5-anchor", "thm5-derivation", "thm5-printed"])


def audit_lemma6_and_theorem7(grid: AuditGrid = DEFAULT_GRID) -> list[IdentityReport]:
    return audit_all(grid, ["lemma6", "thm7"])


def audit_basis_changes(grid: AuditGrid = DEFAULT_GRID) -> list[IdentityReport]:
    return audit_all(grid, ["eq51", "thm8", "thm9"])


def reports_to_json(reports: list[IdentityReport]) -> str:
    """Deterministic serialisation (sorted keys, fixed indentation)."""
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n"
