# Series acting on polynomials.
#
# As a functional, <f(t) | x^n> is the n-th EGF coefficient of f.
# As an operator, t is d/dx, so e^{yt} shifts the argument by y.

from fractions import Fraction

from umbralkit import Poly, Series, functional_apply, apply_operator

p = Poly([1, Fraction(-2, 3), 0, 5])       # 5x^3 - 2/3 x + 1
y = Fraction(7, 3)

# %% evaluation functional
print(functional_apply(Series.exp(6, y), p), p(y))

# %% translation operator
print(apply_operator(Series.exp(6, y), p))

# %% <f | x p(x)> = <f' | p(x)>
f = Series([2, -1, Fraction(1, 4), 3, 0, 1, 1])
print(functional_apply(f, Poly.x() * p), functional_apply(f.deriv(), p))
