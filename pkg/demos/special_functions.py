"""Tour of the special functions the lattice sums are built from."""

import math

from madelung import bessel_k, beta, eta, gamma, zeta

# eta is entire, so it passes straight through s = 1 where zeta has its pole
for s in (-2.0, -0.5, 0.0, 0.5, 1.0, 2.0):
    print(f"eta({s:+.1f}) = {eta(s):+.15f}")

print()
print("zeta(2) - pi^2/6 =", zeta(2.0) - math.pi**2 / 6)
print("zeta(-1) + 1/12  =", zeta(-1.0) + 1.0 / 12)
print("beta(1) - pi/4   =", beta(1.0) - math.pi / 4)
print("gamma(1/2)^2 - pi =", gamma(0.5) ** 2 - math.pi)

# K at half-integral order is elementary: K_{1/2}(x) = sqrt(pi/2x) e^-x
print()
for x in (0.5, 2.0, 10.0, 40.0):
    exact = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
    print(f"K_1/2({x:4.1f}) rel. err {bessel_k(0.5, x) / exact - 1:+.1e}")
