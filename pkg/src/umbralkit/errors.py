"""Exception types raised by the series kernel and the umbral engine."""


class UmbralError(ArithmeticError):
    """Base class for every error raised by umbralkit."""


class DivisionByZeroSeries(UmbralError, ZeroDivisionError):
    """Denominator series vanishes to its stored precision."""


class OrderMismatch(UmbralError):
    """Quotient would be a genuine Laurent series (order(den) > order(num))."""


class CompositionConstantTerm(UmbralError):
    """Inner series of a composition has a nonzero constant term."""


class NotDeltaSeries(UmbralError):
    """Series passed to reversion does not have order exactly 1."""


class PrecisionExhausted(UmbralError):
    """Not enough stored coefficients to complete the operation."""


class BasisMismatch(UmbralError):
    """Connection coefficients failed to recombine (internal bug)."""


class LambdaUnit(UmbralError, ValueError):
    """Frobenius-Euler parameter lambda equal to 1."""
