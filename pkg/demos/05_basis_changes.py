# Rewriting s_n^{(r,k)}(x) in another Appell basis.
#
# The connection coefficients come from one umbral functional per m; the
# recombination is checked against the polynomial itself.

from fractions import Fraction

from umbralkit import expand_in_basis
from umbralkit.families import mixed_pair, euler_pair, bernoulli_pair, frobenius_euler_pair

n, r, k = 4, 1, 2
source = mixed_pair(r, k, n + 2)
targets = {
    "Euler, s=2": euler_pair(2, n + 2),
    "Bernoulli, s=1": bernoulli_pair(1, n + 2),
    "Frobenius-Euler, s=1, lambda=1/2": frobenius_euler_pair(1, Fraction(1, 2), n + 2),
}
for name, target in targets.items():
    terms = expand_in_basis(n, source, target)
    print(name)
    for m, (c, basis_poly) in enumerate(terms):
        print(f"  m={m}  c={c}  r_m={basis_poly}")
