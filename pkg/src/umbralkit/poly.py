"""Dense univariate polynomials over the rationals, in the umbral variable x."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from .rational import RatLike, rat, rat_str


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """Immutable polynomial with ascending rational coefficients.

    ``coeffs[j]`` is the coefficient of ``x**j``. Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()`` and ``degree is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        object.__setattr__(self, "coeffs", _trim([rat(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "Poly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RatLike = 1) -> "Poly":
        if n < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls._raw([Fraction(0)] * n + [rat(c)])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    # -- ring structure -------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Poly._raw([c * a for a in self.coeffs])
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly._raw(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Poly":
        c = rat(c)
        return Poly._raw([a / c for a in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # -- calculus and evaluation ---------------------------------------

    def __call__(self, at: RatLike) -> Fraction:
        """Exact evaluation by Horner's rule."""
        y = rat(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def deriv(self, times: int = 1) -> "Poly":
        coeffs = self.coeffs
        for _ in range(times):
            coeffs = tuple(j * c for j, c in enumerate(coeffs))[1:]
        return Poly._raw(coeffs)

    def shift(self, y: RatLike) -> "Poly":
        return poly_shift(self, y)

    # -- presentation --------------------------------------------------

    def to_json(self) -> dict:
        return {"var": "x", "coeffs": [rat_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        if obj.get("var", "x") != "x":
            raise ValueError(f"expected a polynomial in x, got var={obj.get('var')!r}")
        return cls(obj["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = rat_str(mag)
            else:
                xpart = "x" if j == 1 else f"x^{j}"
                body = xpart if mag == 1 else f"{rat_str(mag)}*{xpart}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly._raw([Fraction(value)])
    return NotImplemented


def poly_shift(p: Poly, y: RatLike) -> Poly:
    """Return ``p(x + y)`` by binomial re-expansion."""
    y = rat(y)
    if y == 0 or not p.coeffs:
        return p
    n = len(p.coeffs)
    ypow = [Fraction(1)]
    for _ in range(n):
        ypow.append(ypow[-1] * y)
    out = [Fraction(0)] * n
    for j, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for i in range(j + 1):
            out[i] += c * comb(j, i) * ypow[j - i]
    return Poly._raw(out)
