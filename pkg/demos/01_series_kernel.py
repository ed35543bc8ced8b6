# Truncated power series with exact rational coefficients.
#
# A Series of precision N knows its coefficients modulo t^N. Everything is a
# Fraction, so the Bernoulli numbers come out exactly.

from umbralkit import Series, series_reversion, series_compose, bernoulli_number
from umbralkit.series import series_div

# %% t/(e^t - 1): division cancels the common factor of t first
N = 10
bern = series_div(Series.t(N), Series.exp(N) - 1)
print(bern)
print([str(bern.egf_coefficient(n)) for n in range(bern.precision)])
assert all(bern.egf_coefficient(n) == bernoulli_number(n) for n in range(bern.precision))

# %% compositional inverse of e^t - 1 is log(1 + t)
f = Series.exp(N) - 1
fbar = series_reversion(f)
print(fbar)
assert series_compose(f, fbar) == Series.t(N)

# %% a Laurent quotient is refused instead of silently truncated
try:
    Series.one(N) / f
except ArithmeticError as exc:
    print(type(exc).__name__, exc)
