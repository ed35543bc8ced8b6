"""Truncated formal power series over the rationals.

A :class:`Series` of precision ``N`` stores the ordinary coefficients
``c_0 .. c_{N-1}``; the series is known modulo ``t**N``. Binary operations
truncate to the smaller precision, so precision loss is always visible.

The exponential-generating-function view used by the umbral functional,
``f(t) = sum a_k t^k / k!``, is available through :meth:`Series.egf_coefficient`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import (
    CompositionConstantTerm,
    DivisionByZeroSeries,
    NotDeltaSeries,
    OrderMismatch,
    PrecisionExhausted,
)
from .rational import RatLike, rat, rat_str


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike], precision: Optional[int] = None):
        cs = [rat(c) for c in coeffs]
        if precision is not None:
            if precision < len(cs):
                cs = cs[:precision]
            else:
                cs += [Fraction(0)] * (precision - len(cs))
        if not cs:
            raise ValueError("series precision must be >= 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "Series":
        if not coeffs:
            raise PrecisionExhausted("series precision dropped below 1")
        s = object.__new__(cls)
        object.__setattr__(s, "coeffs", tuple(coeffs))
        return s

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: RatLike, precision: int) -> "Series":
        return cls([c], precision)

    @classmethod
    def zero(cls, precision: int) -> "Series":
        return cls([], precision)

    @classmethod
    def one(cls, precision: int) -> "Series":
        return cls([1], precision)

    @classmethod
    def t(cls, precision: int) -> "Series":
        """The delta series ``t`` itself."""
        return cls([0, 1], precision)

    @classmethod
    def monomial(cls, k: int, precision: int, c: RatLike = 1) -> "Series":
        return cls([0] * k + [c], precision)

    @classmethod
    def exp(cls, precision: int, a: RatLike = 1) -> "Series":
        """``e^{a t}``."""
        a = rat(a)
        out, term = [], Fraction(1)
        for i in range(precision):
            out.append(term)
            term = term * a / (i + 1)
        return cls._raw(out)

    @classmethod
    def from_egf(cls, egf: Iterable[RatLike], precision: Optional[int] = None) -> "Series":
        """Build from EGF coefficients ``a_k`` of ``sum a_k t^k/k!``."""
        return cls([rat(a) / factorial(k) for k, a in enumerate(egf)], precision)

    # -- accessors ------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def egf_coefficient(self, i: int) -> Fraction:
        if not 0 <= i < self.precision:
            raise PrecisionExhausted(f"coefficient {i} not stored (precision {self.precision})")
        return factorial(i) * self.coeffs[i]

    @property
    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None if zero to precision."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, precision: int) -> "Series":
        if precision > self.precision:
            raise PrecisionExhausted(
                f"cannot raise precision from {self.precision} to {precision}"
            )
        return Series._raw(self.coeffs[:precision])

    # -- operators ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.precision)
        if other is NotImplemented:
            return other
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other, self.precision)
        if other is NotImplemented:
            return other
        return series_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Series._raw([c * a for a in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Series._raw([a / c for a in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        return series_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other, self.precision)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def __pow__(self, e: int):
        return series_int_pow(self, e)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Series", self.coeffs))

    def deriv(self) -> "Series":
        return series_deriv(self)

    def antideriv(self) -> "Series":
        return series_antideriv(self)

    def compose(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def to_json(self) -> dict:
        return {
            "var": "t",
            "precision": self.precision,
            "coeffs": [rat_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Series":
        if obj.get("var", "t") != "t":
            raise ValueError(f"expected a series in t, got var={obj.get('var')!r}")
        return cls(obj["coeffs"], obj["precision"])

    def __repr__(self) -> str:
        body = ", ".join(rat_str(c) for c in self.coeffs)
        return f"Series([{body}] + O(t^{self.precision}))"


def _coerce(value, precision: int):
    if isinstance(value, Series):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Series.constant(value, precision)
    return NotImplemented


def _is_t(f: Series) -> bool:
    return all(c == (1 if i == 1 else 0) for i, c in enumerate(f.coeffs))


def series_add(f: Series, g: Series) -> Series:
    n = min(f.precision, g.precision)
    return Series._raw([f.coeffs[i] + g.coeffs[i] for i in range(n)])


def series_mul(f: Series, g: Series) -> Series:
    n = min(f.precision, g.precision)
    a, b = f.coeffs, g.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return Series._raw(out)


def _invert_unit(g: Sequence[Fraction], n: int) -> list[Fraction]:
    inv0 = 1 / g[0]
    out = [inv0]
    for i in range(1, n):
        acc = Fraction(0)
        for j in range(1, min(i, len(g) - 1) + 1):
            acc += g[j] * out[i - j]
        out.append(-acc * inv0)
    return out


def series_div(f: Series, g: Series) -> Series:
    """Power-series quotient ``f / g``.

    Both operands are shifted down by ``order(g)`` first, so a common factor
    of ``t**v`` cancels (e.g. ``t / (e^t - 1)``). Result precision is
    ``min(Nf, Ng) - order(g)``.
    """
    v = g.order
    if v is None:
        raise DivisionByZeroSeries("denominator is zero to stored precision")
    n = min(f.precision, g.precision) - v
    if n < 1:
        raise PrecisionExhausted("no coefficients of the quotient are determined")
    u = f.order
    if u is not None and u < v:
        raise OrderMismatch(
            f"order(denominator)={v} exceeds order(numerator)={u}: Laurent quotient"
        )
    num = f.coeffs[v : v + n]
    den = g.coeffs[v : v + n]
    inv = _invert_unit(den, n)
    return series_mul(Series._raw(num), Series._raw(inv))


def series_int_pow(f: Series, e: int) -> Series:
    if e < 0:
        return series_int_pow(series_div(Series.one(f.precision), f), -e)
    result = Series.one(f.precision)
    base = f
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(t))`` by Horner's rule, truncated to the smaller precision."""
    if inner.coeffs[0] != 0:
        raise CompositionConstantTerm("inner series must have zero constant term")
    n = min(outer.precision, inner.precision)
    if _is_t(inner):
        return Series._raw(outer.coeffs[:n])
    inner_n = Series._raw(inner.coeffs[:n])
    acc = Series.constant(outer.coeffs[n - 1], n)
    for i in range(n - 2, -1, -1):
        acc = series_mul(acc, inner_n)
        acc = Series._raw((acc.coeffs[0] + outer.coeffs[i],) + acc.coeffs[1:])
    return acc


def series_reversion(f: Series) -> Series:
    """Compositional inverse of a delta series, ``f(fbar(t)) = t`` mod ``t^N``.

    Solved one coefficient at a time: the degree-d coefficient of
    ``f(g)`` depends on ``g_d`` only through ``f_1 * g_d``.
    """
    if f.order != 1:
        raise NotDeltaSeries(f"reversion needs order 1, got order {f.order}")
    if _is_t(f):
        return f
    n = f.precision
    f1 = f.coeffs[1]
    g = [Fraction(0)] * n
    if n > 1:
        g[1] = 1 / f1
    for d in range(2, n):
        probe = series_compose(f, Series._raw(g[: d + 1]))
        g[d] = -probe.coeffs[d] / f1
    return Series._raw(g)


def series_deriv(f: Series) -> Series:
    if f.precision < 2:
        raise PrecisionExhausted("derivative needs precision >= 2")
    return Series._raw([i * f.coeffs[i] for i in range(1, f.precision)])


def series_antideriv(f: Series) -> Series:
    return Series._raw([Fraction(0)] + [c / (i + 1) for i, c in enumerate(f.coeffs)])
