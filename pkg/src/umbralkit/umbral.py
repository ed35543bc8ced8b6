"""The umbral algebra: series acting on polynomials as functionals and operators.

A series ``f(t) = sum a_k t^k/k!`` acts on ``P = Q[x]`` in two ways:

* as a linear functional, ``<f(t) | x^n> = a_n``;
* as a linear operator, with ``t`` acting as ``d/dx`` so that
  ``f(t) x^n = sum_k c_k (n)_k x^(n-k)`` (``c_k`` the ordinary coefficients).

Sheffer sequences ``s_n ~ (g, f)`` are generated from a :class:`ShefferPair`,
and :func:`connection_coefficients` gives the change of basis between two of
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import BasisMismatch, NotDeltaSeries, PrecisionExhausted
from .poly import Poly
from .series import (
    Series,
    series_compose,
    series_deriv,
    series_div,
    series_mul,
    series_reversion,
)


def _check_precision(f: Series, p: Poly) -> None:
    if p.degree is not None and f.precision <= p.degree:
        raise PrecisionExhausted(
            f"series of precision {f.precision} cannot pair with degree {p.degree}"
        )


def functional_apply(f: Series, p: Poly) -> Fraction:
    """``<f(t) | p(x)>``."""
    _check_precision(f, p)
    return sum(
        (c * factorial(j) * f.coeffs[j] for j, c in enumerate(p.coeffs) if c),
        Fraction(0),
    )


def apply_operator(f: Series, p: Poly) -> Poly:
    """``f(t) p(x)`` with ``t = d/dx``."""
    _check_precision(f, p)
    if p.is_zero():
        return p
    out = [Fraction(0)] * len(p.coeffs)
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # t^k x^n = (n)_k x^(n-k); carry (n)_k incrementally
        ff = 1
        for k in range(n + 1):
            ck = f.coeffs[k]
            if ck:
                out[n - k] += c * ck * ff
            ff *= n - k
    return Poly(out)


@dataclass(frozen=True)
class ShefferPair:
    """The datum ``(g(t), f(t))`` with g invertible and f a delta series."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.order != 0:
            raise ValueError(f"g must be invertible (order 0), got order {self.g.order}")
        if self.f.order != 1:
            raise NotDeltaSeries(f"f must be a delta series (order 1), got order {self.f.order}")

    @classmethod
    def appell(cls, g: Series) -> "ShefferPair":
        return cls(g, Series.t(g.precision))

    @property
    def precision(self) -> int:
        return min(self.g.precision, self.f.precision)

    @property
    def is_appell(self) -> bool:
        return all(c == (1 if i == 1 else 0) for i, c in enumerate(self.f.coeffs))


def sheffer_polynomial(pair: ShefferPair, n: int, method: str = "auto") -> Poly:
    """Degree-n member of the Sheffer sequence for ``pair``.

    ``method="appell"`` applies ``1/g(t)`` to ``x^n`` (valid only for
    ``f = t``); ``method="generating-function"`` extracts the ``t^n`` term of
    ``e^{y fbar(t)} / g(fbar(t))`` with the y-dependence kept as polynomial
    coefficients. ``"auto"`` picks the first whenever it applies.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if method == "auto":
        method = "appell" if pair.is_appell else "generating-function"
    if method == "appell":
        if not pair.is_appell:
            raise ValueError("the Appell shortcut needs f(t) = t")
        ginv = series_div(Series.one(pair.g.precision), pair.g)
        return apply_operator(ginv, Poly.monomial(n))
    if method != "generating-function":
        raise ValueError(f"unknown method {method!r}")
    if pair.precision <= n:
        raise PrecisionExhausted(f"pair precision {pair.precision} too small for n={n}")
    fbar = series_reversion(pair.f)
    weight = series_div(Series.one(fbar.precision), series_compose(pair.g, fbar))
    coeffs = []
    power = Series.one(fbar.precision)
    for j in range(n + 1):
        term = series_mul(weight, power)
        coeffs.append(factorial(n) * term.coeffs[n] / factorial(j))
        power = series_mul(power, fbar)
    return Poly(coeffs)


def sheffer_deriv_check(pair: ShefferPair, n: int) -> bool:
    """True iff ``f(t) s_n(x) = n s_{n-1}(x)`` exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s_n = sheffer_polynomial(pair, n)
    s_prev = sheffer_polynomial(pair, n - 1)
    return apply_operator(pair.f, s_n) == s_prev * n


def appell_recurrence_step(pair: ShefferPair, s_n: Poly) -> Poly:
    """``s_{n+1}(x) = (x - g'(t)/g(t)) s_n(x)`` for an Appell pair."""
    if not pair.is_appell:
        raise ValueError("appell_recurrence_step needs f(t) = t")
    log_deriv = series_div(series_deriv(pair.g), pair.g)
    return Poly.x() * s_n - apply_operator(log_deriv, s_n)


def connection_coefficients(source: ShefferPair, target: ShefferPair, n: int) -> list[Fraction]:
    """Row ``c_{n,0..n}`` with ``s_n = sum_m c_{n,m} r_m``.

    ``s_n ~ (g, f)`` is ``source`` and ``r_m ~ (h, l)`` is ``target``;
    ``c_{n,m} = <h(fbar)/g(fbar) * l(fbar)^m | x^n> / m!``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    g, f = source.g, source.f
    h, l = target.g, target.f
    fbar = series_reversion(f)
    ratio = series_div(series_compose(h, fbar), series_compose(g, fbar))
    l_fbar = series_compose(l, fbar)
    xn = Poly.monomial(n)
    row = []
    power = Series.one(l_fbar.precision)
    for m in range(n + 1):
        row.append(functional_apply(series_mul(ratio, power), xn) / factorial(m))
        power = series_mul(power, l_fbar)
    return row


def expand_in_basis(n: int, source: ShefferPair, target: ShefferPair) -> list[tuple[Fraction, Poly]]:
    """Express ``s_n`` (source sequence) in the target basis and check it.

    Returns ``[(c_{n,m}, r_m(x)) for m in 0..n]``.
    """
    row = connection_coefficients(source, target, n)
    terms = [(c, sheffer_polynomial(target, m)) for m, c in enumerate(row)]
    recombined = sum((r_m * c for c, r_m in terms), Poly())
    expected = sheffer_polynomial(source, n)
    if recombined != expected:
        raise BasisMismatch(f"recombination failed at n={n}: {recombined} != {expected}")
    return terms

