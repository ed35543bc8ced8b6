"""Exact rational scalars.

The ground field is :class:`fractions.Fraction`; it is always stored in
lowest terms with a positive denominator, which is exactly what we need.
This module only adds the canonical ``"p/q"`` string form used by the JSON
and CSV interfaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this package is ever rounded.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a 'p/q' string or Fraction")
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    return Fraction(value)


def rat_str(value: Fraction) -> str:
    """Canonical ``"numerator/denominator"`` form (``"3"``, ``"-1/2"``)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
