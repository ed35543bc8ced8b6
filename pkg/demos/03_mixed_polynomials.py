# The mixed Bernoulli / poly-Bernoulli polynomials, four ways.
#
# s_n^{(r,k)}(x) has generating function
#   (t/(e^t-1))^r * Li_k(1-e^{-t})/(1-e^{-t}) * e^{xt}
# and each construction below is independent of the others.

from umbralkit import (
    mixed_poly_gf_path,
    mixed_poly_conv_path,
    mixed_poly_shift_avg_path,
    mixed_poly_stirling_path,
    higher_bernoulli,
    poly_bernoulli,
)
from umbralkit.poly import poly_shift

n, r, k = 4, 2, -1
paths = {
    "operator": mixed_poly_gf_path,
    "convolution": mixed_poly_conv_path,
    "shift average": mixed_poly_shift_avg_path,
    "Stirling": mixed_poly_stirling_path,
}
for name, path in paths.items():
    print(f"{name:14s} {path(n, r, k)}")

# %% r = 0 gives poly-Bernoulli, k = 1 gives a shifted higher-order Bernoulli
print(mixed_poly_gf_path(3, 0, -2) == poly_bernoulli(3, -2))
print(mixed_poly_gf_path(3, 2, 1) == poly_shift(higher_bernoulli(3, 3), 1))

# %% a small table of s_n^{(1,k)}(0)
for k in range(-2, 3):
    print(k, [str(mixed_poly_gf_path(m, 1, k)(0)) for m in range(6)])
